#include <doctest.h>

#include <chrono>

#include "grw/catalog.hpp"
#include "grw/error.hpp"
#include "grw/grading.hpp"
#include "grw/ideals.hpp"

using namespace grw;

namespace {

Elem gauss(int a, int b, int n) { return static_cast<Elem>(a * n + b); }

// Independent oracle for gradedness: brute-force over all members.
bool graded_by_scan(const GradedRing& gr, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Elem a) {
    for (Elem c : gr.decompose(a))
      if (!s.contains(c)) ok = false;
  });
  return ok;
}

}  // namespace

TEST_CASE("standard gradings validate") {
  auto z8i = graded_gaussian(8);
  // 8 real + 8 imaginary with zero shared.
  CHECK(z8i->homogeneous().count() == 15);
  CHECK(z8i->component(0).count() == 8);
  auto d = z8i->decompose(gauss(3, 5, 8));
  CHECK(d[0] == gauss(3, 0, 8));
  CHECK(d[1] == gauss(0, 5, 8));
  for (Elem c : z8i->decompose(0)) CHECK(c == 0);

  auto m = graded_matrix(8);
  CHECK(m->homogeneous().count() == 127);
  CHECK(m->component(1).count() == 1);
  CHECK(m->component(3).count() == 1);
  const auto& r = m->ring();
  const Elem x = matrix_from_entries(r, std::vector<Elem>{1, 2, 3, 4});
  auto dm = m->decompose(x);
  CHECK(dm[0] == matrix_from_entries(r, std::vector<Elem>{1, 0, 0, 4}));
  CHECK(dm[2] == matrix_from_entries(r, std::vector<Elem>{0, 2, 3, 0}));
  CHECK(m->degree_of(matrix_from_entries(r, std::vector<Elem>{0, 1, 1, 0})) == Elem{2});
  CHECK_FALSE(m->degree_of(0));
  CHECK_FALSE(m->degree_of(x));

  auto z4 = graded_zn(4);
  CHECK(z4->homogeneous().count() == 4);

  auto prod = graded_gaussian_product(2, 4);
  CHECK(prod->component(0).count() == 2 * 4);
  // (0, 2i) has degree 1; (1, i) mixes degrees.
  CHECK(prod->degree_of(static_cast<Elem>(0 * 16 + gauss(0, 2, 4))) == Elem{1});
  CHECK_FALSE(prod->is_homogeneous(static_cast<Elem>(gauss(1, 0, 2) * 16 + gauss(0, 1, 4))));
}

TEST_CASE("decompose sums back to the element") {
  for (auto gr : {graded_gaussian(4), graded_matrix(4), graded_gaussian_product(2, 4)}) {
    const auto& r = gr->ring();
    for (Elem a = 0; a < r.order(); ++a) {
      Elem s = 0;
      int nonzero = 0;
      for (Elem c : gr->decompose(a)) {
        s = r.add(s, c);
        nonzero += c != 0;
      }
      CHECK(s == a);
      CHECK(gr->is_homogeneous(a) == (nonzero <= 1));
    }
    for (Elem x : gr->homogeneous_order())
      for (Elem y : gr->homogeneous_order()) {
        if (x == 0 || y == 0) continue;
        const Elem g = *gr->degree_of(x), h = *gr->degree_of(y);
        CHECK(gr->component(gr->group().op(g, h)).contains(r.mul(x, y)));
      }
  }
}

TEST_CASE("grading validation failures") {
  auto z4 = make_zn(4);
  Grading both(make_cyclic(2), {ElementSet::full(4), ElementSet::full(4)});
  auto rep = validate_grading(z4, both);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("16") != std::string::npos);

  ElementSet odd(4);
  odd.insert(0);
  odd.insert(1);
  Grading notsub(make_cyclic(2), {odd, ElementSet::of(4, std::vector<Elem>{0})});
  CHECK_FALSE(validate_grading(z4, notsub).ok);

  auto g = make_gaussian(4);
  ElementSet re(16), im(16);
  for (int a = 0; a < 4; ++a) {
    re.insert(gauss(a, 0, 4));
    im.insert(gauss(0, a, 4));
  }
  // Swapping the components moves the unity out of R_e and breaks R_1 R_1 in R_0.
  CHECK_FALSE(validate_grading(g, Grading(make_cyclic(2), {im, re})).ok);
  CHECK(validate_grading(g, Grading(make_cyclic(2), {re, im})).ok);
  CHECK_THROWS_AS(validate_grading(g, Grading(make_cyclic(3), {re, im})), Error);
  CHECK_THROWS_AS(make_gaussian_grading(make_zn(4)), Error);
  CHECK_THROWS_AS(make_checkerboard_grading(make_zn(4)), Error);
  CHECK_THROWS_AS(make_product_grading(*graded_zn(2), GradedRing(std::make_shared<const FiniteRing>(make_zn(2)), make_trivial_grading(make_zn(2), make_cyclic(3)))), Error);
}

TEST_CASE("generate_ideal") {
  auto z8i = graded_gaussian(8);
  Elem two = gauss(2, 0, 8);
  auto p = generate_ideal(*z8i, std::vector<Elem>{two}, Sidedness::TwoSided);
  CHECK(p.size() == 16);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(p.contains(gauss(a, b, 8)) == (a % 2 == 0 && b % 2 == 0));

  auto m = graded_matrix(8);
  const auto& r = m->ring();
  auto pm = generate_ideal(*m, std::vector<Elem>{matrix_from_entries(r, std::vector<Elem>{2, 0, 0, 0})},
                           Sidedness::TwoSided);
  CHECK(pm.size() == 4 * 4 * 4 * 4);
  pm.members().for_each([&](Elem a) {
    for (Elem e : matrix_entries(r, a)) CHECK(e % 2 == 0);
  });

  auto z = generate_ideal(*z8i, {}, Sidedness::Left);
  CHECK(z.is_zero());
}

TEST_CASE("graded ideals") {
  auto prod = graded_gaussian_product(2, 4);
  // P = {0} x 2T, generated by (0,2) and (0,2i).
  auto p = generate_ideal(*prod, std::vector<Elem>{gauss(2, 0, 4), gauss(0, 2, 4)},
                          Sidedness::TwoSided);
  CHECK(p.size() == 4);
  CHECK(is_graded_ideal(*prod, p).graded);

  auto z2i = graded_gaussian(2);
  auto q = generate_ideal(*z2i, std::vector<Elem>{gauss(1, 1, 2)}, Sidedness::TwoSided);
  CHECK(q.size() == 2);
  auto chk = is_graded_ideal(*z2i, q);
  CHECK(chk.graded == graded_by_scan(*z2i, q.members()));
  CHECK_FALSE(chk.graded);
  REQUIRE(chk.witness);
  CHECK(q.contains(*chk.witness));
  CHECK(is_graded_ideal(*z2i, ElementSet::of(4, std::vector<Elem>{0})).graded);
}

TEST_CASE("graded components and products") {
  auto m = graded_matrix(8);
  const auto& r = m->ring();
  auto p2 = generate_ideal(*m, std::vector<Elem>{matrix_from_entries(r, std::vector<Elem>{2, 0, 0, 0})},
                           Sidedness::TwoSided);
  CHECK(graded_component(*m, p2, 0).count() == 16);
  auto zero = generate_ideal(*m, {}, Sidedness::TwoSided);
  CHECK(graded_component(*m, zero, 2).count() == 1);
  auto whole = generate_ideal(*m, std::vector<Elem>{*r.unity()}, Sidedness::TwoSided);
  CHECK(graded_component(*m, whole, 0) == m->component(0));

  auto sq = ideal_product(*m, p2, p2);
  CHECK(sq.size() == 2 * 2 * 2 * 2);
  sq.members().for_each([&](Elem a) {
    for (Elem e : matrix_entries(r, a)) CHECK(e % 4 == 0);
  });
  CHECK(ideal_product(*m, p2, zero).is_zero());

  auto prod = graded_gaussian_product(2, 4);
  const Elem x = 0 * 16 + gauss(1, 0, 4), y = gauss(1, 0, 2) * 16 + gauss(2, 0, 4);
  auto ix = generate_ideal(*prod, std::vector<Elem>{x}, Sidedness::TwoSided);
  auto iy = generate_ideal(*prod, std::vector<Elem>{y}, Sidedness::TwoSided);
  auto xy = ideal_product(*prod, ix, iy);
  auto p = generate_ideal(*prod, std::vector<Elem>{gauss(2, 0, 4)}, Sidedness::TwoSided);
  CHECK(xy == p);
}

TEST_CASE("graded ideal enumeration") {
  auto z4 = graded_zn(4);
  auto l = enumerate_graded_ideals(*z4, Sidedness::TwoSided);
  REQUIRE(l.size() == 3);
  CHECK(l.front().is_zero());
  CHECK(l[1].size() == 2);
  CHECK(l.back().is_whole());

  auto z8i = graded_gaussian(8);
  CHECK(enumerate_graded_ideals(*z8i, Sidedness::TwoSided).size() == 4);

  auto t0 = std::chrono::steady_clock::now();
  auto m = graded_matrix(8);
  auto two = enumerate_graded_ideals(*m, Sidedness::TwoSided);
  CHECK(two.size() == 4);
  CHECK(enumerate_graded_ideals(*m, Sidedness::Left).size() == 16);
  CHECK(enumerate_graded_ideals(*m, Sidedness::Right).size() == 16);
  MESSAGE("M_2(Z_8) lattices in "
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");
  for (const auto& i : two) {
    CHECK(is_closed(m->ring(), i.members(), Sidedness::TwoSided));
    CHECK(graded_by_scan(*m, i.members()));
  }
  CHECK(enumerate_graded_ideals(*graded_gaussian_product(2, 4), Sidedness::TwoSided).size() == 6);

  auto zr = graded_zn(1);
  CHECK(enumerate_graded_ideals(*zr, Sidedness::TwoSided).size() == 1);
  CHECK_THROWS_AS(enumerate_graded_ideals(*m, Sidedness::Left, 5), Error);
}

TEST_CASE("ideal lattice products stay inside") {
  auto m = graded_matrix(4);
  IdealLattice lat(*m, Sidedness::TwoSided);
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j) {
      auto direct = ideal_product(*m, lat[i], lat[j]);
      CHECK(lat[lat.product(i, j)] == direct);
      CHECK(lat.subset(lat.product(i, j), i));
      CHECK(lat.subset(lat.product(i, j), j));
    }
}
