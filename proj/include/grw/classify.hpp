#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grw/grading.hpp"
#include "grw/ideals.hpp"
#include "grw/kernels.hpp"

namespace grw {

enum class Truth { True, False, Skipped };

// Result of one predicate. A False verdict always carries a witness:
// elements for the elementwise predicates, ideals for the ideal-wise ones.
struct Verdict {
  Truth truth = Truth::True;
  std::vector<Elem> elements;
  std::vector<IdealSubset> ideals;
  std::optional<Elem> degree;  // set by the g-variants
  std::string note;

  bool holds() const noexcept { return truth == Truth::True; }
  bool fails() const noexcept { return truth == Truth::False; }
  static Verdict yes() { return {}; }
  static Verdict skipped(std::string why) {
    Verdict v;
    v.truth = Truth::Skipped;
    v.note = std::move(why);
    return v;
  }
};

// Lazily built per-ring state shared by the predicates: ideal lattices and
// the interleave tables for h(R) and R_e. Build on one thread, then share.
class RingContext {
 public:
  explicit RingContext(GradedRingPtr gr, std::size_t ideal_cap = kDefaultIdealCap);

  const GradedRing& graded() const noexcept { return *gr_; }
  const GradedRingPtr& graded_ptr() const noexcept { return gr_; }
  const FiniteRing& ring() const noexcept { return gr_->ring(); }
  std::size_t ideal_cap() const noexcept { return cap_; }

  // Throws Error(SizeLimit) past the ideal cap.
  const IdealLattice& lattice(Sidedness side) const;
  const InterleaveTable& homogeneous_table() const;  // middle = h(R)
  const InterleaveTable& identity_table() const;     // middle = R_e
  const std::vector<std::size_t>& all_positions() const noexcept { return all_; }
  // Positions (in homogeneous order) of the members of R_g.
  const std::vector<std::size_t>& degree_positions(Elem g) const { return by_degree_[g]; }
  // good(z) rows of P against either table; cached per ideal.
  const ContainmentRows& good_rows(const ElementSet& p, bool identity) const;

 private:
  GradedRingPtr gr_;
  std::size_t cap_;
  mutable std::unique_ptr<IdealLattice> two_sided_, left_, right_;
  mutable std::unique_ptr<InterleaveTable> hom_, ident_;
  mutable std::mutex mu_;
  mutable std::unordered_map<ElementSet, std::unique_ptr<ContainmentRows>, ElementSetHash>
      good_hom_, good_ident_;
  std::vector<std::size_t> all_;
  std::vector<std::vector<std::size_t>> by_degree_;
};

// Throws Error(NotProper) when P = R (including the zero ring).
void require_proper(const RingContext& ctx, const IdealSubset& p);

Verdict is_graded_prime(const RingContext& ctx, const IdealSubset& p);
Verdict is_graded_weakly_prime(const RingContext& ctx, const IdealSubset& p);
Verdict is_graded_2_absorbing(const RingContext& ctx, const IdealSubset& p);
Verdict is_graded_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p);
Verdict is_graded_completely_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p);
Verdict is_graded_strongly_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p);

enum class DegreeMode { Weakly, Plain };
// g-weakly / g-2-absorbing. Throws Error(Precondition) when P_g = R_g.
Verdict is_g_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p, Elem g,
                                DegreeMode mode);

struct TripleZeroScan {
  std::vector<Triple> triples;  // position order over R_g^3
  bool weakly = true;           // whether P is g-weakly 2-absorbing
};
TripleZeroScan find_g_triple_zeros(const RingContext& ctx, const IdealSubset& p, Elem g);

// Throws Error(Precondition) unless A_g B_g K_g ⊆ P.
Verdict is_free_g_triple_zero(const RingContext& ctx, const IdealSubset& p,
                              const IdealSubset& a, const IdealSubset& b,
                              const IdealSubset& k, Elem g);

// Setwise products of graded components: {a b c : a in A_g, b in B_g, c in C_g}
// lies in P / is nonzero. Checked on additive generators (trilinearity).
bool component_product_within(const RingContext& ctx, std::span<const ElementSet* const> parts,
                              const ElementSet& p);
bool component_product_nonzero(const RingContext& ctx, std::span<const ElementSet* const> parts);

struct PredicateOutcome {
  std::string name;
  Verdict verdict;
  double seconds = 0;
};

struct DegreeOutcome {
  Elem degree = 0;
  bool applicable = true;  // P_g ≠ R_g
  Verdict weakly, plain;
  std::size_t triple_zeros = 0;
};

struct ClassificationReport {
  bool proper = true;
  bool graded = true;
  std::vector<PredicateOutcome> predicates;
  std::vector<DegreeOutcome> degrees;

  const PredicateOutcome* find(const std::string& name) const;
};

// Runs every predicate; ideal-wise ones are skipped with a reason when the
// enumeration cap is hit. `degrees` empty means every group element.
ClassificationReport classify_ideal(const RingContext& ctx, const IdealSubset& p,
                                    const std::vector<Elem>& degrees = {});

// Re-checks a False verdict against the raw definition (elements range over
// all of R, ideal products recomputed from scratch). True when the witness
// really falsifies the named predicate.
bool verify_witness(const RingContext& ctx, const IdealSubset& p, const std::string& predicate,
                    const Verdict& v);

}  // namespace grw
