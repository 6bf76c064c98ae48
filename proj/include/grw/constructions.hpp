#pragma once

// Derived graded rings: quotients R/K, idealizations R ⋉ M, and graded
// homomorphisms given as explicit element tables.

#include <cstddef>
#include <string>
#include <vector>

#include "grw/grading.hpp"
#include "grw/ideals.hpp"

namespace grw {

class GradedRingHom {
 public:
  GradedRingHom() = default;
  GradedRingHom(GradedRingPtr source, GradedRingPtr target, std::vector<Elem> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  const GradedRing& source() const noexcept { return *source_; }
  const GradedRing& target() const noexcept { return *target_; }
  const GradedRingPtr& source_ptr() const noexcept { return source_; }
  const GradedRingPtr& target_ptr() const noexcept { return target_; }
  Elem operator()(Elem a) const { return map_[a]; }
  const std::vector<Elem>& table() const noexcept { return map_; }
  bool surjective() const;

 private:
  GradedRingPtr source_, target_;
  std::vector<Elem> map_;
};

// Additive, multiplicative, and f(R_g) within T_g; throws
// Error(MalformedTable) when the table does not fit the carriers.
ValidationReport validate_graded_hom(const GradedRingHom& f);

IdealSubset hom_kernel(const GradedRingHom& f);
// f(P). Requires f surjective and Ker(f) ⊆ P (Error(Precondition) otherwise).
IdealSubset hom_image(const GradedRingHom& f, const IdealSubset& p);
// f^{-1}(I).
IdealSubset hom_preimage(const GradedRingHom& f, const IdealSubset& i);

// The two projections of a ring built by make_product_ring + make_product_grading.
GradedRingHom product_projection(const GradedRingPtr& product, const GradedRingPtr& left,
                                 const GradedRingPtr& right, int which);

struct Quotient {
  GradedRingPtr ring;
  GradedRingHom projection;
};

// R/K with (R/K)_g = (R_g + K)/K. Cosets are numbered by ascending minimal
// representative and named after it. Throws Error(Precondition) unless K is
// a graded two-sided ideal.
Quotient make_quotient(const GradedRingPtr& gr, const IdealSubset& k, std::string label = {});

// Finite abelian group with left and right actions of R and a grading M_g.
struct GradedBimodule {
  std::size_t order = 1;
  std::size_t ring_order = 1;
  std::vector<Elem> add;    // order x order
  std::vector<Elem> left;   // |R| x order: r m
  std::vector<Elem> right;  // order x |R|: m r
  std::vector<ElementSet> components;
  std::vector<std::string> names;
  std::string label;

  Elem plus(Elem a, Elem b) const { return add[std::size_t{a} * order + b]; }
  Elem act_left(Elem r, Elem m) const { return left[std::size_t{r} * order + m]; }
  Elem act_right(Elem m, Elem r) const { return right[std::size_t{m} * ring_order + r]; }
};

// Group axioms, additivity and associativity of both actions, (rm)s = r(ms),
// unital actions when R has a unity, and the grading conditions.
ValidationReport validate_bimodule(const GradedRing& gr, const GradedBimodule& m);

// M = R acting on itself.
GradedBimodule regular_bimodule(const GradedRing& gr);
// M = R/K with induced actions.
GradedBimodule quotient_bimodule(const GradedRing& gr, const IdealSubset& k);

struct Idealization {
  GradedRingPtr ring;  // carrier index r * |M| + m
  GradedRingPtr base;
  GradedBimodule module;

  Elem embed_ring(Elem r) const { return static_cast<Elem>(std::size_t{r} * module.order); }
  Elem embed_module(Elem m) const { return m; }
  Elem pair(Elem r, Elem m) const { return static_cast<Elem>(std::size_t{r} * module.order + m); }
};

// R ⋉ M with (x,m)(y,n) = (xy, xn + my) and X_g = R_g ⊕ M_g. Throws
// Error(Validation) on a bimodule axiom failure, Error(SizeLimit) past the cap.
Idealization make_idealization(const GradedRingPtr& gr, const GradedBimodule& m,
                               std::size_t carrier_cap = kDefaultCarrierCap,
                               std::string label = {});

// P ⋉ M = {(p, m)}.
IdealSubset embed_ideal_in_idealization(const Idealization& x, const IdealSubset& p);

}  // namespace grw
