#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grw/element_set.hpp"

namespace grw {

// Outcome of an axiom scan. `witness` holds the offending elements.
struct ValidationReport {
  bool ok = true;
  std::string violation;
  std::vector<Elem> witness;

  static ValidationReport success() { return {}; }
  static ValidationReport failure(std::string what, std::vector<Elem> w = {}) {
    return {false, std::move(what), std::move(w)};
  }
};

// Finite grading group as an indexed Cayley table. The identity is index 0
// for every constructor in this library; raw tables may say otherwise and
// are caught by validate_group.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Unchecked construction; run validate_group before trusting the result.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> op,
                                Elem identity,
                                std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Elem op(Elem a, Elem b) const { return op_[a * order_ + b]; }
  Elem identity() const noexcept { return identity_; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<Elem>& table() const noexcept { return op_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.op_ == b.op_ && a.identity_ == b.identity_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Elem> op_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<std::string> names_;
};

FiniteGroup make_cyclic(std::size_t k);
FiniteGroup make_product_group(const FiniteGroup& g, const FiniteGroup& h);

// Checks identity, inverses and associativity (in that order).
// Throws Error(MalformedTable) on a dimension mismatch.
ValidationReport validate_group(const FiniteGroup& g);

}  // namespace grw
