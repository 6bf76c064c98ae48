#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "grw/element_set.hpp"
#include "grw/grading.hpp"

namespace grw {

inline constexpr std::size_t kDefaultIdealCap = 10000;

enum class Sidedness { Left, Right, TwoSided, SubgroupOnly };

const char* to_string(Sidedness s);

// Additive subgroup of the carrier, closed under the absorptions its
// sidedness names. Home of P, I, J, A, B, K.
class IdealSubset {
 public:
  IdealSubset() = default;
  IdealSubset(const FiniteRing& r, ElementSet members, Sidedness side, bool graded);

  const ElementSet& members() const noexcept { return members_; }
  Sidedness side() const noexcept { return side_; }
  bool graded() const noexcept { return graded_; }
  bool contains(Elem a) const { return members_.contains(a); }
  std::size_t size() const { return members_.count(); }
  bool is_zero() const { return size() == 1; }
  bool is_whole() const { return size() == members_.universe(); }
  const std::vector<Elem>& additive_generators() const noexcept { return generators_; }

  bool operator==(const IdealSubset& o) const { return members_ == o.members_; }

 private:
  ElementSet members_;
  Sidedness side_ = Sidedness::SubgroupOnly;
  bool graded_ = false;
  std::vector<Elem> generators_;
};

// Smallest subset containing `gens`, closed under addition, negation and
// the requested absorptions. Generators are always members, so this is
// also right for rings without unity.
IdealSubset generate_ideal(const GradedRing& gr, std::span<const Elem> gens, Sidedness side);

// Homogeneous generators of a graded ideal: the first single generator in
// scan order when one exists, otherwise picked greedily in scan order.
// generate_ideal on them returns the ideal again.
std::vector<Elem> homogeneous_generators(const GradedRing& gr, const IdealSubset& p);

// Extends an already-closed subset by more generators.
ElementSet close_ideal(const FiniteRing& r, ElementSet start, std::span<const Elem> extra,
                       Sidedness side);

// True iff `members` is an additive subgroup absorbing on the given sides.
bool is_closed(const FiniteRing& r, const ElementSet& members, Sidedness side);

struct GradedCheck {
  bool graded = true;
  std::optional<Elem> witness;  // member with a component outside the set
};
GradedCheck is_graded_ideal(const GradedRing& gr, const ElementSet& members);
GradedCheck is_graded_ideal(const GradedRing& gr, const IdealSubset& p);

// P ∩ R_g.
ElementSet graded_component(const GradedRing& gr, const IdealSubset& p, Elem g);

// Additive span of {a b : a in I, b in J}.
IdealSubset ideal_product(const GradedRing& gr, const IdealSubset& i, const IdealSubset& j);

// Every graded ideal of the given sidedness, sorted by member bitset.
// Throws Error(SizeLimit) when more than `cap` ideals exist.
std::vector<IdealSubset> enumerate_graded_ideals(const GradedRing& gr, Sidedness side,
                                                 std::size_t cap = kDefaultIdealCap);

// Enumerated graded ideals of one sidedness with their product table.
class IdealLattice {
 public:
  IdealLattice() = default;
  IdealLattice(const GradedRing& gr, Sidedness side, std::size_t cap = kDefaultIdealCap);

  Sidedness side() const noexcept { return side_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const IdealSubset& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<IdealSubset>& ideals() const noexcept { return ideals_; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t zero() const noexcept { return 0; }
  std::size_t whole() const noexcept { return whole_; }
  // Index of IJ; products of graded ideals of one side stay in the lattice.
  std::size_t product(std::size_t i, std::size_t j) const { return products_[i * size() + j]; }
  bool subset(std::size_t i, std::size_t j) const {
    return ideals_[i].members().is_subset_of(ideals_[j].members());
  }
  bool subset_of(std::size_t i, const ElementSet& s) const {
    return ideals_[i].members().is_subset_of(s);
  }

 private:
  Sidedness side_ = Sidedness::TwoSided;
  std::vector<IdealSubset> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::size_t> products_;
  std::size_t whole_ = 0;
};

}  // namespace grw
