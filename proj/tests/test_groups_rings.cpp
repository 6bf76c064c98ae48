#include <doctest.h>

#include <array>

#include "grw/error.hpp"
#include "grw/group.hpp"
#include "grw/ring.hpp"

using namespace grw;

TEST_CASE("cyclic groups") {
  auto z1 = make_cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.identity() == 0);
  auto z4 = make_cyclic(4);
  CHECK(z4.op(3, 2) == 1);
  CHECK(make_cyclic(2).inverse(1) == 1);
  CHECK_THROWS_AS(make_cyclic(0), Error);
  try {
    make_cyclic(0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOrder);
  }
  CHECK(validate_group(z4).ok);
}

TEST_CASE("product groups") {
  auto k = make_product_group(make_cyclic(2), make_cyclic(2));
  CHECK(k.order() == 4);
  for (Elem a = 1; a < 4; ++a) CHECK(k.op(a, a) == k.identity());
  auto g = make_product_group(make_cyclic(2), make_cyclic(4));
  CHECK(g.order() == 8);
  CHECK(g.identity() == 0);
  // (1,1) is 1*4+1, (1,3) is 1*4+3
  CHECK(g.op(5, 7) == 0);
  CHECK(validate_group(g).ok);
}

TEST_CASE("group validation finds the broken axiom") {
  auto z4 = make_cyclic(4);
  auto op = z4.table();
  op[1 * 4 + 1] = 3;
  auto bad = FiniteGroup::from_table(4, op, 0);
  auto rep = validate_group(bad);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.violation.find("associativ") != std::string::npos);
  REQUIRE(rep.witness.size() == 3);
  const auto& w = rep.witness;
  CHECK(bad.op(bad.op(w[0], w[1]), w[2]) != bad.op(w[0], bad.op(w[1], w[2])));

  std::vector<Elem> shifted = {1, 0, 0, 1};
  auto noid = FiniteGroup::from_table(2, shifted, 0);
  auto rep2 = validate_group(noid);
  REQUIRE_FALSE(rep2.ok);
  CHECK(rep2.violation.find("identity") != std::string::npos);

  CHECK_THROWS_AS(validate_group(FiniteGroup::from_table(3, {0, 1}, 0)), Error);
}

TEST_CASE("Z_n tables") {
  auto z8 = make_zn(8);
  CHECK(z8.mul(2, 4) == 0);
  CHECK(make_zn(4).add(3, 3) == 2);
  auto z1 = make_zn(1);
  CHECK(z1.order() == 1);
  REQUIRE(z1.unity());
  CHECK(*z1.unity() == 0);
  CHECK_THROWS_AS(make_zn(0), Error);
  for (std::size_t n : {2, 3, 6, 9, 16}) {
    auto r = make_zn(n);
    auto v = validate_ring(r);
    CHECK(v.report.ok);
    CHECK(v.commutative);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(r.add(a, b) == (a + b) % n);
        CHECK(r.mul(a, b) == (a * b) % n);
      }
  }
}

TEST_CASE("gaussian integers mod n") {
  auto g8 = make_gaussian(8);
  CHECK(g8.order() == 64);
  auto idx = [](int a, int b, int n) { return static_cast<Elem>(((a % n + n) % n) * n + ((b % n + n) % n)); };
  // Independent oracle: (a+bi)(c+di) = (ac-bd) + (ad+bc)i.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; c += 3)
        for (int d = 0; d < 8; d += 5)
          CHECK(g8.mul(idx(a, b, 8), idx(c, d, 8)) == idx(a * c - b * d, a * d + b * c, 8));
  const Elem two = idx(2, 0, 8);
  CHECK(g8.mul(g8.mul(two, two), two) == 0);
  CHECK(g8.mul(two, two) == idx(4, 0, 8));
  CHECK(g8.name(two) == "2");
  CHECK(g8.name(idx(0, 1, 8)) == "i");
  CHECK(g8.name(idx(3, 5, 8)) == "3+5i");

  auto g2 = make_gaussian(2);
  const Elem one_i = idx(1, 1, 2);
  CHECK(g2.mul(one_i, one_i) == 0);
  auto g4 = make_gaussian(4);
  CHECK(g4.mul(idx(2, 0, 4), idx(1, 1, 4)) == idx(2, 2, 4));

  auto v = validate_ring(g8);
  CHECK(v.report.ok);
  REQUIRE(v.unity);
  CHECK(*v.unity == idx(1, 0, 8));
  CHECK_THROWS_AS(make_gaussian(0), Error);
}

TEST_CASE("matrix rings") {
  auto z8 = make_zn(8);
  auto m = make_matrix_ring(z8, 2);
  CHECK(m.order() == 4096);
  auto mat = [&](std::vector<Elem> e) { return matrix_from_entries(m, e); };
  const Elem a = mat({3, 0, 0, 2}), b = mat({0, 3, 5, 0}), c = mat({7, 0, 0, 4});
  const Elem abc = m.mul(m.mul(a, b), c);
  CHECK(abc == mat({0, 4, 6, 0}));
  // Integer product [[0,36],[70,0]] reduced entrywise.
  auto mm = [](std::array<int, 4> x, std::array<int, 4> y) {
    return std::array<int, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  const auto z = mm(mm({3, 0, 0, 2}, {0, 3, 5, 0}), {7, 0, 0, 4});
  CHECK(z == std::array<int, 4>{0, 36, 70, 0});
  std::vector<Elem> reduced;
  for (int v : z) reduced.push_back(static_cast<Elem>(v % 8));
  CHECK(matrix_entries(m, abc) == reduced);
  CHECK(m.name(a) == "[[3,0],[0,2]]");

  auto m2 = make_matrix_ring(make_zn(2), 2);
  auto v = validate_ring(m2);
  CHECK(v.report.ok);
  REQUIRE(v.unity);
  CHECK(*v.unity == matrix_from_entries(m2, std::vector<Elem>{1, 0, 0, 1}));
  CHECK_FALSE(v.commutative);
  REQUIRE(v.noncommuting);
  CHECK(m2.mul(v.noncommuting->first, v.noncommuting->second) !=
        m2.mul(v.noncommuting->second, v.noncommuting->first));
  const Elem e12 = matrix_from_entries(m2, std::vector<Elem>{0, 1, 0, 0});
  CHECK(m2.mul(e12, e12) == 0);

  CHECK_THROWS_AS(make_matrix_ring(make_zn(16), 2), Error);
  CHECK_THROWS_AS(make_matrix_ring(z8, 2, 1000), Error);
}

TEST_CASE("product rings") {
  auto r = make_gaussian(2), t = make_gaussian(4);
  auto p = make_product_ring(r, t);
  CHECK(p.order() == 64);
  auto pair = [&](Elem u, Elem v) { return static_cast<Elem>(u * t.order() + v); };
  // (0,1)(1,2) = (0,2), with 1 and 2 the real units of each factor.
  const Elem one_r = 2, one_t = 4, two_t = 8;
  CHECK(p.mul(pair(0, one_t), pair(one_r, two_t)) == pair(0, two_t));
  CHECK(p.mul(pair(one_r, 0), pair(0, one_t)) == 0);
  REQUIRE(p.unity());
  CHECK(*p.unity() == pair(one_r, one_t));
  // Projections respect both operations.
  for (Elem x = 0; x < 64; ++x)
    for (Elem y = 0; y < 64; ++y) {
      CHECK(p.mul(x, y) / 16 == r.mul(x / 16, y / 16));
      CHECK(p.add(x, y) % 16 == t.add(x % 16, y % 16));
    }
}

TEST_CASE("table rings") {
  std::vector<std::vector<int>> add = {{0, 1}, {1, 0}}, mul = {{0, 0}, {0, 1}};
  auto z2 = make_table_ring(add, mul);
  CHECK(z2.order() == 2);
  CHECK(validate_ring(z2).report.ok);

  auto z1 = make_table_ring({{0}}, {{0}});
  CHECK(z1.order() == 1);

  // Z_3 addition with mul(1,2) patched breaks distributivity.
  std::vector<std::vector<int>> a3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> m3 = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  m3[1][2] = 1;
  try {
    make_table_ring(a3, m3);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
    CHECK(std::string(e.what()).find("at (") != std::string::npos);
  }
  CHECK_THROWS_AS(make_table_ring({{0, 1}}, {{0, 0}, {0, 1}}), Error);
}

TEST_CASE("validate_ring reports a patched table") {
  auto z4 = make_zn(4);
  auto mul = z4.mul_table();
  mul[2 * 4 + 3] = 1;
  auto bad = FiniteRing::from_tables(4, z4.add_table(), mul, Elem{1}, {}, {});
  auto v = validate_ring(bad);
  CHECK_FALSE(v.report.ok);
  CHECK_FALSE(v.report.witness.empty());
}
