#pragma once

// Bitset fast path for the triple predicates. For homogeneous x, y, z and an
// additive subgroup P,
//   x R y R z ⊆ P    iff  x h(R) y h(R) z ⊆ P,
//   x R y R z = {0}  iff  x h(R) y h(R) z = {0},
// since both conditions are additive in the interleaved elements. The
// tables below precompute V(x,y) = {x m y : m in middle} (homogeneous, so a
// bitset over h(R) positions) and, per ideal, the rows
// good(z) = {v : v m z in P for all m}. A triple check is then one subset
// test plus one intersection test. The raw-definition counterpart lives in
// reference.hpp.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grw/element_set.hpp"
#include "grw/grading.hpp"

namespace grw {

inline constexpr std::size_t kMaxHomogeneous = 1024;

struct Triple {
  Elem x = 0, y = 0, z = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleState {
  bool contained = false;  // x M y M z ⊆ P
  bool nonzero = false;    // x M y M z ≠ {0}
};

enum class TripleRule {
  TwoAbsorbing,        // contained, and none of xy, yz, xz in P
  WeaklyTwoAbsorbing,  // contained and nonzero, and none of xy, yz, xz in P
  CompletelyWeakly,    // 0 ≠ xyz ∈ P, and none of xy, yz, xz in P
  ElementPrime,        // contained and nonzero, and none of x, y, z in P
  TripleZero,          // x M y M z = 0, and none of xy, yz, xz in P
  ContainedNonzero,    // 0 ≠ x M y M z ⊆ P, nothing else
};

class InterleaveTable {
 public:
  // `middle` must consist of homogeneous elements. Throws Error(SizeLimit)
  // when h(R) has more than kMaxHomogeneous elements.
  InterleaveTable(const GradedRing& gr, std::vector<Elem> middle);

  const GradedRing& graded() const noexcept { return *gr_; }
  const std::vector<Elem>& middle() const noexcept { return middle_; }
  std::size_t positions() const noexcept { return n_; }
  std::span<const std::uint64_t> between(std::size_t px, std::size_t py) const {
    return between_.row(px * n_ + py);
  }
  std::span<const std::uint64_t> reaching(std::size_t pz) const { return reaching_.row(pz); }

 private:
  const GradedRing* gr_;
  std::vector<Elem> middle_;
  std::size_t n_;
  BitRows between_;
  BitRows reaching_;
};

// good(z) rows for one ideal.
class ContainmentRows {
 public:
  ContainmentRows(const InterleaveTable& table, const ElementSet& p);
  std::span<const std::uint64_t> row(std::size_t pz) const { return rows_.row(pz); }

 private:
  BitRows rows_;
};

inline TripleState evaluate(const InterleaveTable& t, const ContainmentRows& good,
                            std::size_t px, std::size_t py, std::size_t pz) {
  const auto v = t.between(px, py);
  return {bits::subset(v, good.row(pz)), bits::intersects(v, t.reaching(pz))};
}

// First triple (in position order over xs × ys × zs) matching `rule`.
// Positions index GradedRing::homogeneous_order(). Parallel over xs.
std::optional<Triple> first_triple(const InterleaveTable& t, const ContainmentRows& good,
                                   const ElementSet& p, TripleRule rule,
                                   std::span<const std::size_t> xs,
                                   std::span<const std::size_t> ys,
                                   std::span<const std::size_t> zs);

// Every triple matching `rule`, in position order.
std::vector<Triple> all_triples(const InterleaveTable& t, const ContainmentRows& good,
                                const ElementSet& p, TripleRule rule,
                                std::span<const std::size_t> xs,
                                std::span<const std::size_t> ys,
                                std::span<const std::size_t> zs);

// Number of triples matching `rule`.
std::size_t count_triples(const InterleaveTable& t, const ContainmentRows& good,
                          const ElementSet& p, TripleRule rule,
                          std::span<const std::size_t> xs, std::span<const std::size_t> ys,
                          std::span<const std::size_t> zs);

// True iff the (x, y, z) positions satisfy `rule`.
bool matches(const InterleaveTable& t, const ContainmentRows& good, const ElementSet& p,
             TripleRule rule, std::size_t px, std::size_t py, std::size_t pz);

}  // namespace grw
