#pragma once

// Executable versions of the structural results on graded (weakly)
// 2-absorbing ideals, run over a corpus of small graded rings, plus the
// search for a counterexample to the ideal-wise triple question and a
// per-ring census.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grw/constructions.hpp"
#include "grw/grading.hpp"
#include "grw/ideals.hpp"
#include "grw/spec.hpp"

namespace grw {

struct CorpusEntry {
  GradedRingPtr ring;
  std::string label;  // constructor expression; re-parses to the same ring
  std::optional<Idealization> idealization;
  std::optional<std::pair<GradedRingPtr, GradedRingPtr>> factors;  // product rings
};
using Corpus = std::vector<CorpusEntry>;

// Z_n (n in 2,3,4,6,8,9,16), Z_n[i] (n in 2,3,4,8), M_2(Z_n) (n in 2,4,8),
// Z_2[i] x Z_4[i], the quotient of each of these by every nonzero proper
// graded ideal, and the idealizations Z_2[i] ⋉ Z_2[i], Z_4 ⋉ Z_4 and
// Z_4 ⋉ Z_4/2Z_4.
Corpus default_corpus();
// Every *.spec file in `dir` (sorted by file name); ideal statements are ignored.
Corpus load_corpus(const std::filesystem::path& dir, const ParseOptions& opts = {});
CorpusEntry corpus_entry(const RingSpecDocument& doc);

struct IdealRef {
  std::vector<Elem> gens;  // homogeneous generators
  std::vector<std::string> names;
};

struct Finding {
  std::string ring;
  std::vector<IdealRef> ideals;
  std::vector<Elem> elements;
  std::vector<std::string> element_names;
  std::optional<Elem> degree;
  std::string detail;
  bool verified = false;  // re-checked from raw definitions
};

struct Skip {
  std::string ring;
  std::string reason;
};

struct PropertyResult {
  std::string id;
  std::string statement;
  std::size_t instances = 0;  // cases where the hypothesis held
  std::vector<Finding> violations;
  std::vector<Skip> skipped;

  bool vacuous() const noexcept { return instances == 0; }
};

struct TheoremOptions {
  std::size_t ideal_cap = kDefaultIdealCap;
};

// "P1" ... "P19".
const std::vector<std::string>& property_ids();
const std::string& property_statement(const std::string& id);

// Unknown ids throw Error(Precondition).
PropertyResult run_property(const std::string& id, const Corpus& corpus,
                            const TheoremOptions& opts = {});
// All nineteen in id order, sharing lattices, verdicts and quotient rings.
std::vector<PropertyResult> run_all_properties(const Corpus& corpus,
                                               const TheoremOptions& opts = {});

// For P graded weakly 2-absorbing but not graded 2-absorbing and graded
// ideals A, B, K: does 0 ≠ ABK ⊆ P force AB, AK or BK into P?
struct Question1Certificate {
  std::size_t rings = 0;
  std::size_t qualifying_ideals = 0;  // such P
  std::size_t examined = 0;           // (P, A, B, K) tuples scanned
  std::size_t hypothesis_hits = 0;    // tuples with 0 ≠ ABK ⊆ P
  std::vector<Finding> counterexamples;
  std::vector<Skip> skipped;

  bool partial() const noexcept { return !skipped.empty(); }
};
Question1Certificate search_question1(const Corpus& corpus, const TheoremOptions& opts = {});

struct CensusRow {
  std::string ring;
  std::size_t order = 0;
  bool commutative = false;
  bool unital = false;
  std::size_t graded_ideals = 0;  // two-sided, including 0 and R
  std::size_t prime = 0, weakly_prime = 0;
  std::size_t two_absorbing = 0, weakly_two_absorbing = 0, strongly_weakly = 0;
  std::size_t weakly_not_two_absorbing = 0;
  std::size_t triple_zeros = 0;  // over every proper P and degree g
  bool all_strongly_weakly = false;
};
struct Census {
  std::vector<CensusRow> rows;
  std::vector<Skip> skipped;
};
Census run_census(const Corpus& corpus, const TheoremOptions& opts = {});

}  // namespace grw
