#pragma once

// Ring-spec documents. Statements are separated by newlines or ';', and
// '#' starts a comment:
//
//   ring: product(gaussian(2), gaussian(4))
//   grading: product
//   ideal P: gens [(0,2), (0,2i)]
//   option ideal-cap: 500
//
// Expressions: zn(n), gaussian(n), matrix(e, k), product(e, e),
// quotient(e, gens [...]), idealization(e), idealization(e, quotient gens [...]),
// table(add [[...]], mul [[...]]). Gradings: trivial, trivial(k), gaussian,
// checkerboard, product, inherited; omitted means the expression's own
// grading. Ideal sides: left, right, two-sided (default).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grw/constructions.hpp"
#include "grw/grading.hpp"
#include "grw/ideals.hpp"

namespace grw {

// Parsed constructor expression with the ring it builds under its own grading.
struct RingExpr {
  enum class Kind { Zn, Gaussian, Matrix, Product, Quotient, Idealization, Table };
  Kind kind = Kind::Zn;
  std::size_t param = 0;
  std::vector<std::shared_ptr<RingExpr>> children;
  std::vector<std::string> gens;  // quotient generators (literals of children[0])
  std::vector<std::vector<int>> add, mul;
  std::string text;  // canonical expression text

  GradedRingPtr ring;
  std::optional<Quotient> quotient;      // Quotient kind; also idealization(e, quotient ...)
  std::optional<Idealization> idealization;
};

struct NamedIdeal {
  std::string name;
  std::vector<std::string> literals;
  std::vector<Elem> gens;
  IdealSubset ideal;
};

struct RingSpecDocument {
  std::shared_ptr<RingExpr> expr;
  std::string grading;  // as written; empty when omitted
  GradedRingPtr ring;   // with the selected grading
  std::vector<NamedIdeal> ideals;
  std::map<std::string, std::string> options;

  std::optional<std::size_t> option_size(const std::string& key) const;
};

struct ParseOptions {
  // Overrides "option ring-cap" in the document when set.
  std::optional<std::size_t> ring_cap;
};

// Throws Error(Parse) with "line:col: message" on syntax errors, unknown
// constructors or gradings, and literals that are malformed or not
// homogeneous; construction failures keep their own error kinds.
RingSpecDocument parse_spec(const std::string& text, const ParseOptions& opts = {});

// Element literal in the grammar of the expression's ring.
Elem parse_element(const RingExpr& expr, const std::string& literal);

// Builds a bare expression such as "quotient(zn(8), gens [4])".
std::shared_ptr<RingExpr> parse_ring_expr(const std::string& text,
                                          const ParseOptions& opts = {});

}  // namespace grw
