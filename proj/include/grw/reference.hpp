#pragma once

// Serial raw-definition evaluation of the triple predicates. Interleaved
// elements range over an explicit list (all of R for the raw definition,
// R_e for the g-variants) with no homogeneity reduction and no bitsets.
// Kept as the independent oracle for kernels.hpp and as the baseline in the
// benchmark.

#include <optional>
#include <span>
#include <vector>

#include "grw/element_set.hpp"
#include "grw/grading.hpp"
#include "grw/kernels.hpp"

namespace grw::reference {

// All elements of R, in index order.
std::vector<Elem> carrier(const FiniteRing& r);

// Literal check of x M y M z ⊆ P and x M y M z ≠ {0}.
TripleState evaluate(const FiniteRing& r, const ElementSet& p, std::span<const Elem> middle,
                     Elem x, Elem y, Elem z);

// Same, memoizing the inner {w s z : s in M} scans per (w, z).
class Evaluator {
 public:
  Evaluator(const FiniteRing& r, const ElementSet& p, std::vector<Elem> middle);
  TripleState operator()(Elem x, Elem y, Elem z);

 private:
  const FiniteRing* r_;
  const ElementSet* p_;
  std::vector<Elem> middle_;
  std::vector<signed char> memo_;  // per (w, z): -1 unknown, bit0 inside P, bit1 nonzero
  ElementSet scratch_;
};

bool matches(const FiniteRing& r, const ElementSet& p, TripleRule rule, TripleState s, Elem x,
             Elem y, Elem z);

// Serial scan in the order xs × ys × zs (element lists).
std::optional<Triple> first_triple(const FiniteRing& r, const ElementSet& p,
                                   std::span<const Elem> middle, TripleRule rule,
                                   std::span<const Elem> xs, std::span<const Elem> ys,
                                   std::span<const Elem> zs);

std::vector<Triple> all_triples(const FiniteRing& r, const ElementSet& p,
                                std::span<const Elem> middle, TripleRule rule,
                                std::span<const Elem> xs, std::span<const Elem> ys,
                                std::span<const Elem> zs);

}  // namespace grw::reference
