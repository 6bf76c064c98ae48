#include <doctest.h>

#include <set>

#include "grw/catalog.hpp"
#include "grw/error.hpp"
#include "grw/parallel.hpp"
#include "grw/spec.hpp"
#include "grw/theorems.hpp"

using namespace grw;

namespace {

Corpus single(const char* expr) {
  auto e = parse_ring_expr(expr);
  return {corpus_entry(RingSpecDocument{e, {}, e->ring, {}, {}})};
}

const PropertyResult& by_id(const std::vector<PropertyResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  FAIL("missing " << id);
  return rs.front();
}

// Brute-force triple-zero count for Z_n over every proper ideal dZ_n whose
// zero condition is xyz = 0 (unity, trivial grading).
std::size_t zn_triple_zeros(int n) {
  std::size_t total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || d == 1) continue;
    auto in_p = [&](int v) { return (v % n) % d == 0; };
    bool weakly = true;
    std::size_t zeros = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const int xyz = x * y * z % n;
          const bool pairs_out = !in_p(x * y) && !in_p(y * z) && !in_p(x * z);
          if (!pairs_out) continue;
          if (xyz == 0) ++zeros;
          else if (in_p(xyz)) weakly = false;
        }
    if (weakly) total += zeros;
  }
  return total;
}

}  // namespace

TEST_CASE("default corpus labels re-parse to the same rings") {
  const auto corpus = default_corpus();
  CHECK(corpus.size() == 37);
  std::set<std::string> labels;
  for (const auto& e : corpus) {
    CAPTURE(e.label);
    CHECK(labels.insert(e.label).second);
    auto again = parse_ring_expr(e.label);
    CHECK(again->ring->ring().mul_table() == e.ring->ring().mul_table());
    CHECK(again->ring->ring().add_table() == e.ring->ring().add_table());
  }
  std::size_t idealizations = 0, products = 0;
  for (const auto& e : corpus) {
    idealizations += e.idealization.has_value();
    products += e.factors.has_value();
  }
  CHECK(idealizations == 3);
  CHECK(products == 1);
}

TEST_CASE("empty corpus gives nineteen vacuous results") {
  const auto rs = run_all_properties({});
  REQUIRE(rs.size() == 19);
  for (const auto& r : rs) {
    CHECK(r.vacuous());
    CHECK(r.violations.empty());
  }
  const auto q = search_question1({});
  CHECK(q.examined == 0);
  CHECK(q.counterexamples.empty());
}

TEST_CASE("non-unital ring skips the unital properties") {
  const auto rs = run_all_properties(single("table(add [[0,1],[1,0]], mul [[0,0],[0,0]])"));
  for (const char* id : {"P5", "P14"}) {
    const auto& r = by_id(rs, id);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].reason == "requires unity");
  }
  for (const auto& r : rs) CHECK(r.violations.empty());
}

TEST_CASE("triple-zero rigidity on Z_8[i]") {
  const auto corpus = single("gaussian(8)");
  const auto p12 = run_property("P12", corpus);
  const auto p13 = run_property("P13", corpus);
  CHECK(p12.violations.empty());
  CHECK(p13.violations.empty());
  CHECK(p12.instances > 0);
  CHECK(p13.instances > 0);
  CHECK(run_property("P3", corpus).violations.empty());
}

TEST_CASE("triple-zero census matches brute force on Z_n") {
  for (int n : {8, 9, 12, 16}) {
    CAPTURE(n);
    const auto c = run_census(single(("zn(" + std::to_string(n) + ")").c_str()));
    REQUIRE(c.rows.size() == 1);
    CHECK(c.rows[0].triple_zeros == zn_triple_zeros(n));
  }
  CHECK(zn_triple_zeros(8) == 8);  // (2|6, 2|6, 2|6) for P = 0
}

TEST_CASE("strongly weakly everywhere fails for Z_16") {
  // (2)(2)(2) = (8) ≠ 0 while (2)(2) = (4) ⊄ (8).
  const auto c = run_census(single("zn(16)"));
  CHECK_FALSE(c.rows[0].all_strongly_weakly);
  const auto rs = run_all_properties(single("zn(16)"));
  CHECK(by_id(rs, "P18").instances == 0);
  CHECK(by_id(rs, "P19").instances == 0);
  const auto z8 = run_all_properties(single("zn(8)"));
  CHECK(by_id(z8, "P18").instances == 1);
  CHECK(by_id(z8, "P19").instances == 4);
}

TEST_CASE("ideal-wise triple search counts every tuple") {
  // In Z_2[i] x Z_4[i] only P = 0 qualifies; an exhaustion certificate
  // still counts every (P, A, B, K).
  const auto q = search_question1(single("product(gaussian(2),gaussian(4))"));
  CHECK(q.qualifying_ideals == 1);
  CHECK(q.examined == 6 * 6 * 6);
  CHECK(q.hypothesis_hits == 0);
  CHECK(q.counterexamples.empty());
  CHECK_FALSE(q.partial());
}

TEST_CASE("theorem results do not depend on the worker count") {
  const auto corpus = single("idealization(zn(4))");
  set_num_workers(1);
  const auto a = run_all_properties(corpus);
  set_num_workers(4);
  const auto b = run_all_properties(corpus);
  set_num_workers(0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].instances == b[i].instances);
    CHECK(a[i].violations.size() == b[i].violations.size());
  }
}

TEST_CASE("ideal cap turns into recorded skips") {
  TheoremOptions o;
  o.ideal_cap = 2;
  const auto r = run_property("P3", single("zn(8)"), o);
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].reason.rfind("cap exceeded", 0) == 0);
  CHECK_THROWS_AS(run_property("P20", {}), Error);
}
