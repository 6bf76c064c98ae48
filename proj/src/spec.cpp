#include "grw/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "grw/catalog.hpp"
#include "grw/error.hpp"

namespace grw {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

[[noreturn]] void bad_literal(const std::string& lit, const std::string& why) {
  fail(ErrorKind::Parse, "bad literal '" + lit + "': " + why);
}

long long parse_int(const std::string& s, const std::string& lit) {
  long long v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) bad_literal(lit, "expected an integer");
  return v;
}

std::size_t mod(long long v, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((v % m) + m) % m);
}

// Splits "x, y, (a,b)" at top-level commas.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string unwrap(const std::string& lit, char open, char close) {
  const std::string t = trim(lit);
  if (t.size() < 2 || t.front() != open || t.back() != close)
    bad_literal(lit, std::string("expected ") + open + "..." + close);
  return t.substr(1, t.size() - 2);
}

Elem parse_gaussian(const std::string& lit, std::size_t n) {
  const std::string s = strip_spaces(lit);
  if (s.empty()) bad_literal(lit, "empty");
  long long re = 0, im = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    const std::size_t d = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    const std::string digits = s.substr(d, i - d);
    if (i < s.size() && s[i] == 'i') {
      ++i;
      im += sign * (digits.empty() ? 1 : parse_int(digits, lit));
    } else {
      if (digits.empty()) bad_literal(lit, "expected a+bi");
      re += sign * parse_int(digits, lit);
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') bad_literal(lit, "expected a+bi");
  }
  return static_cast<Elem>(mod(re, n) * n + mod(im, n));
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string int_rows_text(const std::vector<std::vector<int>>& rows) {
  std::vector<std::string> parts;
  for (const auto& row : rows) {
    std::vector<std::string> xs;
    for (int v : row) xs.push_back(std::to_string(v));
    parts.push_back("[" + join(xs, ",") + "]");
  }
  return "[" + join(parts, ",") + "]";
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t off) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < off && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

struct Literal {
  std::string text;
  std::size_t offset;
};

// Character-level recursive descent over one statement [pos, end).
class Parser {
 public:
  Parser(const std::string& text, std::size_t begin, std::size_t end, std::size_t cap)
      : text_(text), pos_(begin), end_(end), cap_(cap) {}

  [[noreturn]] void error_at(std::size_t off, const std::string& msg,
                             ErrorKind kind = ErrorKind::Parse) const {
    auto [l, c] = line_col(text_, off);
    fail(kind, std::to_string(l) + ":" + std::to_string(c) + ": " + msg);
  }
  [[noreturn]] void error(const std::string& msg) const { error_at(pos_, msg); }

  void skip_ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= end_;
  }
  std::size_t pos() const { return pos_; }
  bool accept(char c) {
    skip_ws();
    if (pos_ < end_ && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '-' || text_[pos_] == '_'))
      ++pos_;
    if (b == pos_) error("expected a name");
    return text_.substr(b, pos_ - b);
  }
  long long integer() {
    skip_ws();
    const std::size_t b = pos_;
    if (pos_ < end_ && text_[pos_] == '-') ++pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long v = 0;
    auto [p, ec] = std::from_chars(text_.data() + b, text_.data() + pos_, v);
    if (ec != std::errc() || p != text_.data() + pos_) error_at(b, "expected an integer");
    return v;
  }
  std::size_t positive() {
    const std::size_t b = (skip_ws(), pos_);
    const long long v = integer();
    if (v <= 0) error_at(b, "expected a positive integer");
    return static_cast<std::size_t>(v);
  }
  std::string rest() {
    std::string r = trim(std::string_view(text_).substr(pos_, end_ - pos_));
    pos_ = end_;
    return r;
  }

  // '[' literal, ... ']' with literals kept as raw text.
  std::vector<Literal> literal_list() {
    expect('[');
    std::vector<Literal> out;
    int depth = 0;
    std::size_t start = pos_;
    auto push = [&](std::size_t stop) {
      std::size_t off = start;
      while (off < stop && std::isspace(static_cast<unsigned char>(text_[off]))) ++off;
      out.push_back({trim(std::string_view(text_).substr(start, stop - start)), off});
    };
    for (; pos_ < end_; ++pos_) {
      const char c = text_[pos_];
      if (c == '(' || c == '[') {
        ++depth;
      } else if (c == ')' || c == ']') {
        if (depth == 0) {
          if (c != ']') error("unbalanced ')'");
          push(pos_);
          ++pos_;
          if (out.size() == 1 && out[0].text.empty()) out.clear();
          for (const auto& l : out)
            if (l.text.empty()) error_at(l.offset, "empty literal");
          return out;
        }
        --depth;
      } else if (c == ',' && depth == 0) {
        push(pos_);
        start = pos_ + 1;
      }
    }
    error("unterminated '['");
  }

  std::vector<std::vector<int>> int_rows() {
    expect('[');
    std::vector<std::vector<int>> rows;
    if (accept(']')) return rows;
    do {
      expect('[');
      std::vector<int> row;
      if (!accept(']')) {
        do row.push_back(static_cast<int>(integer()));
        while (accept(','));
        expect(']');
      }
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    return rows;
  }

  std::shared_ptr<RingExpr> expr() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    auto e = std::make_shared<RingExpr>();
    expect('(');
    if (name == "zn" || name == "gaussian") {
      e->kind = name == "zn" ? RingExpr::Kind::Zn : RingExpr::Kind::Gaussian;
      e->param = positive();
    } else if (name == "matrix") {
      e->kind = RingExpr::Kind::Matrix;
      e->children.push_back(expr());
      expect(',');
      e->param = positive();
    } else if (name == "product") {
      e->kind = RingExpr::Kind::Product;
      e->children.push_back(expr());
      expect(',');
      e->children.push_back(expr());
    } else if (name == "quotient") {
      e->kind = RingExpr::Kind::Quotient;
      e->children.push_back(expr());
      expect(',');
      keyword("gens");
      lits_ = literal_list();
    } else if (name == "idealization") {
      e->kind = RingExpr::Kind::Idealization;
      e->children.push_back(expr());
      lits_.clear();
      if (accept(',')) {
        keyword("quotient");
        keyword("gens");
        lits_ = literal_list();
        has_module_quotient_ = true;
      } else {
        has_module_quotient_ = false;
      }
    } else if (name == "table") {
      e->kind = RingExpr::Kind::Table;
      keyword("add");
      e->add = int_rows();
      expect(',');
      keyword("mul");
      e->mul = int_rows();
    } else {
      error_at(at, "unknown constructor '" + name + "'");
    }
    expect(')');
    build(*e, at);
    return e;
  }

  void keyword(const char* kw) {
    const std::size_t at = (skip_ws(), pos_);
    if (ident() != kw) error_at(at, std::string("expected '") + kw + "'");
  }

  std::vector<Elem> elements(const RingExpr& e, const std::vector<Literal>& lits) const {
    std::vector<Elem> out;
    for (const auto& l : lits) {
      try {
        out.push_back(parse_element(e, l.text));
      } catch (const Error& err) {
        error_at(l.offset, err.what(), err.kind());
      }
    }
    return out;
  }

 private:
  // Builds e.ring; construction errors keep their kind and gain a position.
  void build(RingExpr& e, std::size_t at) {
    const std::vector<Literal> lits = lits_;
    const bool module_quotient = has_module_quotient_;
    lits_.clear();
    try {
      build_inner(e, lits, module_quotient);
    } catch (const Error& err) {
      const std::string what = err.what();
      if (!what.empty() && std::isdigit(static_cast<unsigned char>(what[0]))) throw;
      error_at(at, what, err.kind());
    }
  }

  void build_inner(RingExpr& e, const std::vector<Literal>& lits, bool module_quotient) {
    using K = RingExpr::Kind;
    switch (e.kind) {
      case K::Zn:
        e.text = "zn(" + std::to_string(e.param) + ")";
        check_carrier_cap(e.param, cap_, "Z_n");
        e.ring = graded_zn(e.param);
        break;
      case K::Gaussian:
        e.text = "gaussian(" + std::to_string(e.param) + ")";
        check_carrier_cap(e.param * e.param, cap_, "Z_n[i]");
        e.ring = graded_gaussian(e.param);
        break;
      case K::Matrix: {
        const auto& base = *e.children[0];
        e.text = "matrix(" + base.text + "," + std::to_string(e.param) + ")";
        auto r = std::make_shared<const FiniteRing>(
            make_matrix_ring(base.ring->ring(), e.param, cap_));
        Grading g = e.param == 2 ? make_checkerboard_grading(*r)
                                 : make_trivial_grading(*r, make_cyclic(2));
        e.ring = std::make_shared<const GradedRing>(r, std::move(g), e.text);
        break;
      }
      case K::Product: {
        const auto& l = *e.children[0];
        const auto& rt = *e.children[1];
        e.text = "product(" + l.text + "," + rt.text + ")";
        auto r = std::make_shared<const FiniteRing>(
            make_product_ring(l.ring->ring(), rt.ring->ring(), cap_));
        e.ring = std::make_shared<const GradedRing>(r, make_product_grading(*l.ring, *rt.ring),
                                                    e.text);
        break;
      }
      case K::Quotient: {
        const auto& base = *e.children[0];
        const auto gens = elements(base, lits);
        for (Elem a : gens) e.gens.push_back(base.ring->ring().name(a));
        e.text = "quotient(" + base.text + ", gens [" + join(e.gens, ",") + "])";
        auto k = generate_ideal(*base.ring, gens, Sidedness::TwoSided);
        e.quotient = make_quotient(base.ring, k, e.text);
        e.ring = e.quotient->ring;
        break;
      }
      case K::Idealization: {
        const auto& base = *e.children[0];
        GradedBimodule m;
        if (module_quotient) {
          const auto gens = elements(base, lits);
          for (Elem a : gens) e.gens.push_back(base.ring->ring().name(a));
          e.text = "idealization(" + base.text + ", quotient gens [" + join(e.gens, ",") + "])";
          auto k = generate_ideal(*base.ring, gens, Sidedness::TwoSided);
          e.quotient = make_quotient(base.ring, k);
          m = quotient_bimodule(*base.ring, k);
        } else {
          e.text = "idealization(" + base.text + ")";
          m = regular_bimodule(*base.ring);
        }
        e.idealization = make_idealization(base.ring, m, cap_, e.text);
        e.ring = e.idealization->ring;
        break;
      }
      case K::Table: {
        e.text = "table(add " + int_rows_text(e.add) + ", mul " + int_rows_text(e.mul) + ")";
        check_carrier_cap(e.add.size(), cap_, "table ring");
        auto r = std::make_shared<const FiniteRing>(make_table_ring(e.add, e.mul));
        e.ring = std::make_shared<const GradedRing>(r, make_trivial_grading(*r, make_cyclic(2)),
                                                    e.text);
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_, end_;
  std::size_t cap_;
  std::vector<Literal> lits_;
  bool has_module_quotient_ = false;
};

struct Statement {
  std::size_t begin, end;
};

std::vector<Statement> split_statements(const std::string& text) {
  std::vector<Statement> out;
  int depth = 0;
  std::size_t start = 0;
  std::size_t i = 0;
  auto close = [&](std::size_t stop) {
    std::size_t b = start;
    while (b < stop && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    if (b < stop) out.push_back({b, stop});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      close(i);
      while (i < text.size() && text[i] != '\n') ++i;
      start = i;
      continue;
    }
    if (c == '(' || c == '[') ++depth;
    else if ((c == ')' || c == ']') && depth > 0) --depth;
    else if ((c == ';' || c == '\n') && depth == 0) {
      close(i);
      start = i + 1;
    }
    ++i;
  }
  close(text.size());
  return out;
}

Sidedness parse_side(Parser& p) {
  const std::size_t at = (p.skip_ws(), p.pos());
  const std::string s = p.ident();
  if (s == "left") return Sidedness::Left;
  if (s == "right") return Sidedness::Right;
  if (s == "two-sided") return Sidedness::TwoSided;
  p.error_at(at, "unknown side '" + s + "'");
}

const std::set<std::string> kKnownOptions = {"ideal-cap", "ring-cap", "workers", "degrees"};

std::optional<std::size_t> to_size(const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

GradedRingPtr select_grading(const RingExpr& e, const std::string& sel, std::size_t k) {
  using K = RingExpr::Kind;
  if (sel.empty()) return e.ring;
  if (sel == "trivial") {
    auto g = make_trivial_grading(e.ring->ring(), make_cyclic(k));
    return std::make_shared<const GradedRing>(e.ring->ring_ptr(), std::move(g),
                                              e.text + " / trivial(" + std::to_string(k) + ")");
  }
  const bool ok = (sel == "gaussian" && e.kind == K::Gaussian) ||
                  (sel == "checkerboard" && e.kind == K::Matrix && e.param == 2) ||
                  (sel == "product" && e.kind == K::Product) ||
                  (sel == "inherited" && (e.kind == K::Quotient || e.kind == K::Idealization));
  if (!ok) fail(ErrorKind::Parse, "grading '" + sel + "' does not apply to " + e.text);
  return e.ring;
}

}  // namespace

std::optional<std::size_t> RingSpecDocument::option_size(const std::string& key) const {
  auto it = options.find(key);
  if (it == options.end()) return std::nullopt;
  return to_size(it->second);
}

Elem parse_element(const RingExpr& e, const std::string& literal) {
  using K = RingExpr::Kind;
  const std::string lit = trim(literal);
  if (lit.empty()) bad_literal(literal, "empty");
  if (lit == "0") return 0;
  switch (e.kind) {
    case K::Zn:
      return static_cast<Elem>(mod(parse_int(strip_spaces(lit), lit), e.param));
    case K::Gaussian:
      return parse_gaussian(lit, e.param);
    case K::Matrix: {
      const auto rows = split_top(unwrap(lit, '[', ']'));
      if (rows.size() != e.param) bad_literal(lit, "expected " + std::to_string(e.param) + " rows");
      std::vector<Elem> entries;
      for (const auto& row : rows) {
        const auto xs = split_top(unwrap(row, '[', ']'));
        if (xs.size() != e.param)
          bad_literal(lit, "expected " + std::to_string(e.param) + " entries per row");
        for (const auto& x : xs) entries.push_back(parse_element(*e.children[0], x));
      }
      return matrix_from_entries(e.ring->ring(), entries);
    }
    case K::Product: {
      const auto xs = split_top(unwrap(lit, '(', ')'));
      if (xs.size() != 2) bad_literal(lit, "expected (u,v)");
      const Elem u = parse_element(*e.children[0], xs[0]);
      const Elem v = parse_element(*e.children[1], xs[1]);
      return static_cast<Elem>(std::size_t{u} * e.children[1]->ring->order() + v);
    }
    case K::Quotient:
      return e.quotient->projection(parse_element(*e.children[0], lit));
    case K::Idealization: {
      const auto xs = split_top(unwrap(lit, '(', ')'));
      if (xs.size() != 2) bad_literal(lit, "expected (u,v)");
      const Elem u = parse_element(*e.children[0], xs[0]);
      Elem v = parse_element(*e.children[0], xs[1]);
      if (e.quotient) v = e.quotient->projection(v);
      return e.idealization->pair(u, v);
    }
    case K::Table: {
      const long long v = parse_int(strip_spaces(lit), lit);
      if (v < 0 || static_cast<std::size_t>(v) >= e.ring->order())
        bad_literal(lit, "element index out of range");
      return static_cast<Elem>(v);
    }
  }
  bad_literal(lit, "unsupported ring");
}

std::shared_ptr<RingExpr> parse_ring_expr(const std::string& text, const ParseOptions& opts) {
  Parser p(text, 0, text.size(), opts.ring_cap.value_or(kDefaultCarrierCap));
  auto e = p.expr();
  if (!p.at_end()) p.error("unexpected trailing text");
  return e;
}

RingSpecDocument parse_spec(const std::string& text, const ParseOptions& opts) {
  RingSpecDocument doc;
  const auto stmts = split_statements(text);
  // Options first so ring-cap applies to the construction.
  struct Pending {
    std::size_t begin, end;
    std::string head, name;
  };
  std::vector<Pending> rest;
  for (const auto& s : stmts) {
    Parser p(text, s.begin, s.end, 0);
    const std::string head = p.ident();
    std::string name;
    if (head == "ideal" || head == "option") {
      name = p.ident();
    } else if (head != "ring" && head != "grading") {
      p.error_at(s.begin, "unknown statement '" + head + "'");
    }
    p.expect(':');
    if (head == "option") {
      if (!kKnownOptions.count(name)) p.error_at(s.begin, "unknown option '" + name + "'");
      const std::size_t at = (p.skip_ws(), p.pos());
      std::string v = p.rest();
      if (name != "degrees" && !to_size(v)) p.error_at(at, "expected a non-negative integer");
      doc.options[name] = std::move(v);
      continue;
    }
    rest.push_back({p.pos(), s.end, head, name});
  }
  const std::size_t cap =
      opts.ring_cap.value_or(doc.option_size("ring-cap").value_or(kDefaultCarrierCap));

  std::size_t grading_k = 2;
  std::size_t grading_at = 0;
  std::set<std::string> names;
  std::vector<Pending> ideals;
  for (const auto& st : rest) {
    Parser p(text, st.begin, st.end, cap);
    if (st.head == "ring") {
      if (doc.expr) p.error("duplicate ring statement");
      doc.expr = p.expr();
      if (!p.at_end()) p.error("unexpected trailing text");
    } else if (st.head == "grading") {
      if (!doc.grading.empty()) p.error("duplicate grading statement");
      grading_at = (p.skip_ws(), p.pos());
      doc.grading = p.ident();
      static const std::set<std::string> known = {"trivial", "gaussian", "checkerboard",
                                                  "product", "inherited"};
      if (!known.count(doc.grading)) p.error_at(grading_at, "unknown grading '" + doc.grading + "'");
      if (doc.grading == "trivial" && p.accept('(')) {
        grading_k = p.positive();
        p.expect(')');
      }
      if (!p.at_end()) p.error("unexpected trailing text");
    } else {
      if (!names.insert(st.name).second) p.error("duplicate ideal '" + st.name + "'");
      ideals.push_back(st);
    }
  }
  if (!doc.expr) fail(ErrorKind::Parse, "1:1: missing ring statement");
  try {
    doc.ring = select_grading(*doc.expr, doc.grading, grading_k);
  } catch (const Error& err) {
    Parser(text, grading_at, grading_at, cap).error_at(grading_at, err.what(), err.kind());
  }

  const auto& gr = *doc.ring;
  for (const auto& st : ideals) {
    Parser p(text, st.begin, st.end, cap);
    p.keyword("gens");
    const auto lits = p.literal_list();
    Sidedness side = Sidedness::TwoSided;
    if (!p.at_end()) side = parse_side(p);
    if (!p.at_end()) p.error("unexpected trailing text");
    NamedIdeal ni;
    ni.name = st.name;
    ni.gens = p.elements(*doc.expr, lits);
    for (std::size_t i = 0; i < lits.size(); ++i) {
      ni.literals.push_back(lits[i].text);
      const Elem a = ni.gens[i];
      if (a != 0 && !gr.is_homogeneous(a)) {
        std::vector<std::string> parts;
        const auto comps = gr.decompose(a);
        for (Elem g = 0; g < comps.size(); ++g)
          if (comps[g] != 0) parts.push_back(gr.ring().name(comps[g]));
        p.error_at(lits[i].offset, "not homogeneous: components " + join(parts, " and "));
      }
    }
    ni.ideal = generate_ideal(gr, ni.gens, side);
    doc.ideals.push_back(std::move(ni));
  }
  return doc;
}

}  // namespace grw
