#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grw/element_set.hpp"
#include "grw/group.hpp"

namespace grw {

inline constexpr std::size_t kDefaultCarrierCap = 4096;
// Elem loops run to order - 1, so the carrier must stay below 2^16.
inline constexpr std::size_t kMaxCarrier = 65535;

// How a ring was built; downstream code (gradings, literal parsing) keys
// off this to recover coordinates from element indices.
struct RingShape {
  enum class Kind { Table, Zn, Gaussian, Matrix, Product, Quotient, Idealization };
  Kind kind = Kind::Table;
  std::size_t param = 0;  // n for Zn / Gaussian, k for Matrix
  std::size_t left = 0;   // base order (Matrix), |R| (Product, Idealization)
  std::size_t right = 0;  // |T| (Product), |M| (Idealization)
};

// Finite associative ring, possibly non-commutative and possibly without
// unity, materialized as full operation tables. Zero is always index 0.
class FiniteRing {
 public:
  using Table = std::vector<std::uint16_t>;

  FiniteRing() = default;

  // Unchecked; negation is derived from the addition table. Use
  // make_table_ring for a validated ring.
  static FiniteRing from_tables(std::size_t order, Table add, Table mul,
                                std::optional<Elem> unity,
                                std::vector<std::string> names, RingShape shape);

  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return 0; }
  Elem add(Elem a, Elem b) const { return add_[std::size_t{a} * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t{a} * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  const std::optional<Elem>& unity() const noexcept { return unity_; }
  bool has_unity() const noexcept { return unity_.has_value(); }
  bool is_commutative() const noexcept { return commutative_; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const RingShape& shape() const noexcept { return shape_; }
  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }
  const Table& neg_table() const noexcept { return neg_; }

  // Greedy additive generating set: every element is a left-nested sum of
  // these (so also a subgroup generating set once the axioms hold).
  const std::vector<Elem>& additive_generators() const noexcept {
    return generators_;
  }

  // Set once validation has run (constructors validate their output).
  void set_unity(std::optional<Elem> u) { unity_ = u; }
  void set_commutative(bool c) { commutative_ = c; }

 private:
  std::size_t order_ = 0;
  Table add_, mul_, neg_;
  std::optional<Elem> unity_;
  bool commutative_ = false;
  std::vector<std::string> names_;
  RingShape shape_;
  std::vector<Elem> generators_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingValidation {
  ValidationReport report;
  std::optional<Elem> unity;  // found by exhaustive search when not declared
  bool commutative = true;
  std::optional<std::pair<Elem, Elem>> noncommuting;  // witness pair
};

// Axiom scan: abelian addition, associativity and both distributive laws,
// declared unity. Uses additive generators so the cost is O(n^2 * |gens|).
// Throws Error(MalformedTable) on dimension mismatch.
RingValidation validate_ring(const FiniteRing& r);

FiniteRing make_zn(std::size_t n);
FiniteRing make_gaussian(std::size_t n);
FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t k,
                            std::size_t carrier_cap = kDefaultCarrierCap);
FiniteRing make_product_ring(const FiniteRing& r, const FiniteRing& t,
                             std::size_t carrier_cap = kDefaultCarrierCap);
// Rows of the tables are given as element indices. Throws
// Error(Validation) naming the failing axiom and witness.
FiniteRing make_table_ring(const std::vector<std::vector<int>>& add,
                           const std::vector<std::vector<int>>& mul,
                           std::vector<std::string> names = {});

// Validates `r` and records its unity and commutativity. Throws
// Error(Validation) naming the failed axiom.
FiniteRing finalize_ring(FiniteRing r);
// Throws Error(SizeLimit) when `order` exceeds the cap (or kMaxCarrier).
void check_carrier_cap(std::size_t order, std::size_t cap, const char* what);

// Left-nested closure of `gens` under addition starting from zero.
ElementSet additive_span(const FiniteRing& r, std::span<const Elem> gens);

// Coordinates of a matrix-ring element (row-major, base indices).
std::vector<Elem> matrix_entries(const FiniteRing& m, Elem a);
Elem matrix_from_entries(const FiniteRing& m, std::span<const Elem> entries);

}  // namespace grw
