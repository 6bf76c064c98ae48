#include <doctest.h>

#include "grw/catalog.hpp"
#include "grw/classify.hpp"
#include "grw/constructions.hpp"
#include "grw/error.hpp"

using namespace grw;

namespace {

Elem gauss(int a, int b, int n) { return static_cast<Elem>(a * n + b); }

IdealSubset ideal(const GradedRing& gr, std::vector<Elem> gens) {
  return generate_ideal(gr, gens, Sidedness::TwoSided);
}

// Isomorphism check against a known target: the map must be a bijective
// graded homomorphism.
bool graded_iso(const GradedRingPtr& a, const GradedRingPtr& b, std::vector<Elem> map) {
  if (a->order() != b->order()) return false;
  GradedRingHom f(a, b, std::move(map));
  return f.surjective() && validate_graded_hom(f).ok;
}

}  // namespace

TEST_CASE("quotient of Z_8[i] by 4 is Z_4[i]") {
  auto z8i = graded_gaussian(8);
  auto k = ideal(*z8i, {gauss(4, 0, 8)});
  auto q = make_quotient(z8i, k);
  CHECK(q.ring->order() == 16);
  CHECK(validate_graded_hom(q.projection).ok);
  CHECK(hom_kernel(q.projection) == k);
  // Coset of a+bi has minimal representative (a mod 4) + (b mod 4)i.
  auto z4i = graded_gaussian(4);
  std::vector<Elem> iso(16);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) iso[q.projection(gauss(a, b, 8))] = gauss(a % 4, b % 4, 4);
  CHECK(graded_iso(q.ring, z4i, iso));
  CHECK(hom_preimage(q.projection, ideal(*q.ring, {})) == k);
}

TEST_CASE("degenerate quotients") {
  auto z4i = graded_gaussian(4);
  auto id = make_quotient(z4i, ideal(*z4i, {}));
  CHECK(id.ring->order() == 16);
  CHECK(id.projection.table() == [] {
    std::vector<Elem> v(16);
    for (Elem i = 0; i < 16; ++i) v[i] = i;
    return v;
  }());
  auto all = make_quotient(z4i, ideal(*z4i, {gauss(1, 0, 4)}));
  CHECK(all.ring->order() == 1);
  // Non-graded ideal (1+i) of Z_2[i] is rejected.
  auto z2i = graded_gaussian(2);
  CHECK_THROWS_AS(make_quotient(z2i, ideal(*z2i, {gauss(1, 1, 2)})), Error);
}

TEST_CASE("product projections") {
  auto a = graded_gaussian(2), b = graded_gaussian(4);
  auto p = graded_gaussian_product(2, 4);
  auto pr = product_projection(p, a, b, 1);
  CHECK(validate_graded_hom(pr).ok);
  auto ker = hom_kernel(pr);
  CHECK(ker.graded());
  CHECK(ker.size() == 4);
  ker.members().for_each([&](Elem e) { CHECK(e % 16 == 0); });
  auto pl = product_projection(p, a, b, 0);
  CHECK(validate_graded_hom(pl).ok);
  CHECK(hom_kernel(pl).size() == 16);
  // Image transport needs Ker(f) inside P: 0 x 2T contains neither kernel.
  auto pp = ideal(*p, {gauss(2, 0, 4)});
  CHECK_THROWS_AS(hom_image(pr, pp), Error);
  CHECK_THROWS_AS(hom_image(pl, pp), Error);
  auto big = ideal(*p, {static_cast<Elem>(gauss(1, 0, 2) * 16), gauss(2, 0, 4)});
  auto img = hom_image(pr, big);
  CHECK(img == ideal(*b, {gauss(2, 0, 4)}));
  CHECK(hom_preimage(pr, img) == big);
}

TEST_CASE("a broken homomorphism table is reported") {
  auto z4 = graded_zn(4);
  auto z2 = graded_zn(2);
  GradedRingHom f(z4, z2, {0, 1, 1, 0});
  CHECK_FALSE(validate_graded_hom(f).ok);
  GradedRingHom g(z4, z2, {0, 1, 0, 1});
  CHECK(validate_graded_hom(g).ok);
  CHECK_THROWS_AS(validate_graded_hom(GradedRingHom(z4, z2, {0, 1})), Error);
}

TEST_CASE("idealization Z_4 x Z_4") {
  auto z4 = graded_zn(4);
  auto m = regular_bimodule(*z4);
  CHECK(validate_bimodule(*z4, m).ok);
  auto x = make_idealization(z4, m);
  const auto& r = x.ring->ring();
  CHECK(r.order() == 16);
  // (2,1)(2,3) = (4, 2*3 + 1*2) = (0, 0)
  CHECK(r.mul(x.pair(2, 1), x.pair(2, 3)) == 0);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(r.mul(x.pair(0, a), x.pair(0, b)) == 0);
  REQUIRE(r.unity());
  CHECK(*r.unity() == x.pair(1, 0));
  auto p2 = embed_ideal_in_idealization(x, ideal(*z4, {2}));
  CHECK(p2.size() == 8);
  CHECK(p2.graded());
  auto p0 = embed_ideal_in_idealization(x, ideal(*z4, {}));
  CHECK(p0.size() == 4);
  auto pw = embed_ideal_in_idealization(x, ideal(*z4, {1}));
  CHECK(pw.is_whole());
  CHECK_FALSE(p2.is_whole());
}

TEST_CASE("graded idealizations validate") {
  auto z2i = graded_gaussian(2);
  auto x = make_idealization(z2i, regular_bimodule(*z2i));
  CHECK(validate_grading(x.ring->ring(), x.ring->grading()).ok);
  CHECK(x.ring->order() == 16);

  auto z4 = graded_zn(4);
  auto qm = quotient_bimodule(*z4, ideal(*z4, {2}));
  CHECK(qm.order == 2);
  CHECK(validate_bimodule(*z4, qm).ok);
  auto y = make_idealization(z4, qm);
  CHECK(y.ring->order() == 8);
  CHECK(validate_grading(y.ring->ring(), y.ring->grading()).ok);
}

TEST_CASE("bimodule validation catches a bad action") {
  auto z4 = graded_zn(4);
  auto m = regular_bimodule(*z4);
  m.left[1 * 4 + 1] = 2;
  auto rep = validate_bimodule(*z4, m);
  CHECK_FALSE(rep.ok);
  CHECK_THROWS_AS(make_idealization(z4, m), Error);
  auto m2 = regular_bimodule(*z4);
  m2.left.pop_back();
  CHECK_THROWS_AS(validate_bimodule(*z4, m2), Error);
}
