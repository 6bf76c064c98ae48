#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grw/element_set.hpp"
#include "grw/group.hpp"
#include "grw/ring.hpp"

namespace grw {

// Assignment g -> R_g of additive subgroups, one per grading-group element.
class Grading {
 public:
  Grading() = default;
  Grading(FiniteGroup group, std::vector<ElementSet> components)
      : group_(std::move(group)), components_(std::move(components)) {}

  const FiniteGroup& group() const noexcept { return group_; }
  const ElementSet& component(Elem g) const { return components_[g]; }
  const std::vector<ElementSet>& components() const noexcept { return components_; }

 private:
  FiniteGroup group_;
  std::vector<ElementSet> components_;
};

// Subgroup axioms, internal direct sum (span = R and prod |R_g| = |R|),
// R_g R_h within R_gh, and unity in R_e. Throws Error(MalformedTable) when
// the components are not indexed by all of G over this carrier.
ValidationReport validate_grading(const FiniteRing& r, const Grading& grading);

// Ring with a validated grading and precomputed decompositions.
class GradedRing {
 public:
  // Throws Error(Validation) with the failing axiom if the grading is bad.
  GradedRing(RingPtr ring, Grading grading, std::string label = {});

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Grading& grading() const noexcept { return grading_; }
  const FiniteGroup& group() const noexcept { return grading_.group(); }
  std::size_t order() const noexcept { return ring_->order(); }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const ElementSet& component(Elem g) const { return grading_.component(g); }
  // a_g for every g, indexed by group element.
  std::span<const Elem> decompose(Elem a) const {
    return {decomposition_.data() + std::size_t{a} * group().order(), group().order()};
  }
  // Degree of a nonzero homogeneous element; nullopt for zero and for
  // non-homogeneous elements.
  std::optional<Elem> degree_of(Elem a) const {
    return degree_[a] < 0 ? std::nullopt : std::optional<Elem>(static_cast<Elem>(degree_[a]));
  }
  bool is_homogeneous(Elem a) const { return homogeneous_.contains(a); }

  // h(R) as a carrier subset.
  const ElementSet& homogeneous() const noexcept { return homogeneous_; }
  // Scan order used for witnesses: zero, then nonzero members of each R_g
  // by group element, ascending element index within a component.
  const std::vector<Elem>& homogeneous_order() const noexcept { return scan_order_; }
  int position(Elem a) const { return position_[a]; }
  // Additive generators of R_g.
  const std::vector<Elem>& component_generators(Elem g) const {
    return component_generators_[g];
  }

 private:
  RingPtr ring_;
  Grading grading_;
  std::string label_;
  std::vector<Elem> decomposition_;
  std::vector<int> degree_;
  ElementSet homogeneous_;
  std::vector<Elem> scan_order_;
  std::vector<int> position_;
  std::vector<std::vector<Elem>> component_generators_;
};

using GradedRingPtr = std::shared_ptr<const GradedRing>;

// h(R) as a subset; same as GradedRing::homogeneous.
ElementSet homogeneous_elements(const GradedRing& gr);

Grading make_trivial_grading(const FiniteRing& r, const FiniteGroup& g);
// Z_2-grading of Z_n[i]: real axis in degree 0, imaginary axis in degree 1.
Grading make_gaussian_grading(const FiniteRing& r);
// Z_4-grading of M_2(S): diagonal in degree 0, antidiagonal in degree 2.
Grading make_checkerboard_grading(const FiniteRing& r);
// Componentwise grading (R x T)_g = R_g x T_g over the ring built by
// make_product_ring(gr.ring(), gt.ring()).
Grading make_product_grading(const GradedRing& gr, const GradedRing& gt);

// Additive generators of a subgroup given by its members (greedy).
std::vector<Elem> subgroup_generators(const FiniteRing& r, const ElementSet& members);

}  // namespace grw
