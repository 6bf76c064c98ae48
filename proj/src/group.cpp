#include "grw/group.hpp"

#include "grw/error.hpp"

namespace grw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::MalformedTable: return "malformed-table";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::NotProper: return "not-proper";
    case ErrorKind::RequiresUnity: return "requires-unity";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> op,
                                    Elem identity,
                                    std::vector<std::string> names) {
  FiniteGroup g;
  g.order_ = order;
  g.op_ = std::move(op);
  g.identity_ = identity;
  g.names_ = std::move(names);
  if (g.names_.size() != order) {
    g.names_.clear();
    for (std::size_t i = 0; i < order; ++i) g.names_.push_back(std::to_string(i));
  }
  g.inverse_.assign(order, identity);
  if (g.op_.size() == order * order) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (g.op_[a * order + b] == identity) {
          g.inverse_[a] = static_cast<Elem>(b);
          break;
        }
  }
  return g;
}

FiniteGroup make_cyclic(std::size_t k) {
  if (k == 0) fail(ErrorKind::InvalidOrder, "cyclic group order must be >= 1");
  std::vector<Elem> op(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) op[a * k + b] = static_cast<Elem>((a + b) % k);
  return FiniteGroup::from_table(k, std::move(op), 0);
}

FiniteGroup make_product_group(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), n = h.order();
  const std::size_t order = m * n;
  std::vector<Elem> op(order * order);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    names.push_back("(" + g.name(static_cast<Elem>(a / n)) + "," +
                    h.name(static_cast<Elem>(a % n)) + ")");
    for (std::size_t b = 0; b < order; ++b) {
      const Elem x = g.op(static_cast<Elem>(a / n), static_cast<Elem>(b / n));
      const Elem y = h.op(static_cast<Elem>(a % n), static_cast<Elem>(b % n));
      op[a * order + b] = static_cast<Elem>(x * n + y);
    }
  }
  const Elem id = static_cast<Elem>(g.identity() * n + h.identity());
  return FiniteGroup::from_table(order, std::move(op), id, std::move(names));
}

ValidationReport validate_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.table().size() != n * n || g.identity() >= n)
    fail(ErrorKind::MalformedTable, "group table dimensions do not match order");
  for (std::size_t i = 0; i < n * n; ++i)
    if (g.table()[i] >= n)
      fail(ErrorKind::MalformedTable, "group table entry out of range");

  const Elem e = g.identity();
  for (Elem x = 0; x < n; ++x)
    if (g.op(e, x) != x || g.op(x, e) != x)
      return ValidationReport::failure("identity", {e, x});
  for (Elem x = 0; x < n; ++x)
    if (g.op(x, g.inverse(x)) != e || g.op(g.inverse(x), x) != e)
      return ValidationReport::failure("inverse", {x});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          return ValidationReport::failure("associativity", {a, b, c});
  return ValidationReport::success();
}

}  // namespace grw
