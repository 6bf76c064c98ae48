#include "grw/ring.hpp"

#include <sstream>

#include "grw/error.hpp"

namespace grw {
namespace {

std::vector<Elem> reach_from_zero(const FiniteRing::Table& add, std::size_t n,
                                  std::span<const Elem> gens,
                                  std::vector<char>& seen) {
  seen.assign(n, 0);
  std::vector<Elem> order{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Elem g : gens) {
      const Elem v = add[std::size_t{order[i]} * n + g];
      if (v < n && !seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
    }
  }
  return order;
}

std::vector<Elem> greedy_generators(const FiniteRing::Table& add, std::size_t n) {
  std::vector<Elem> gens;
  std::vector<char> seen;
  reach_from_zero(add, n, gens, seen);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    gens.push_back(static_cast<Elem>(a));
    reach_from_zero(add, n, gens, seen);
  }
  return gens;
}

void check_cap(std::size_t order, std::size_t cap, const char* what) {
  if (order > cap || order > kMaxCarrier) {
    std::ostringstream os;
    os << what << " would have " << order << " elements, above the carrier cap of "
       << std::min(cap, kMaxCarrier);
    fail(ErrorKind::SizeLimit, os.str());
  }
}

FiniteRing finish(FiniteRing r) {
  const auto v = validate_ring(r);
  if (!v.report.ok)
    fail(ErrorKind::Validation, "constructed ring failed " + v.report.violation);
  r.set_unity(v.unity);
  r.set_commutative(v.commutative);
  return r;
}

std::string gaussian_name(std::size_t a, std::size_t b) {
  if (b == 0) return std::to_string(a);
  const std::string imag = (b == 1 ? std::string() : std::to_string(b)) + "i";
  if (a == 0) return imag;
  return std::to_string(a) + "+" + imag;
}

}  // namespace

FiniteRing FiniteRing::from_tables(std::size_t order, Table add, Table mul,
                                   std::optional<Elem> unity,
                                   std::vector<std::string> names,
                                   RingShape shape) {
  FiniteRing r;
  r.order_ = order;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.unity_ = unity;
  r.names_ = std::move(names);
  r.shape_ = shape;
  if (r.names_.size() != order) {
    r.names_.clear();
    for (std::size_t i = 0; i < order; ++i) r.names_.push_back(std::to_string(i));
  }
  r.neg_.assign(order, 0);
  if (r.add_.size() == order * order) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (r.add_[a * order + b] == 0) {
          r.neg_[a] = static_cast<std::uint16_t>(b);
          break;
        }
    r.generators_ = greedy_generators(r.add_, order);
  }
  return r;
}

RingValidation validate_ring(const FiniteRing& r) {
  const std::size_t n = r.order();
  if (n == 0 || n > kMaxCarrier || r.add_table().size() != n * n ||
      r.mul_table().size() != n * n || r.names().size() != n)
    fail(ErrorKind::MalformedTable, "ring tables do not match the declared order");
  for (std::size_t i = 0; i < n * n; ++i)
    if (r.add_table()[i] >= n || r.mul_table()[i] >= n)
      fail(ErrorKind::MalformedTable, "ring table entry out of range");
  if (r.unity() && *r.unity() >= n)
    fail(ErrorKind::MalformedTable, "declared unity out of range");

  RingValidation out;
  auto bad = [&](std::string what, std::vector<Elem> w) {
    out.report = ValidationReport::failure(std::move(what), std::move(w));
    return out;
  };

  for (Elem x = 0; x < n; ++x)
    if (r.add(0, x) != x || r.add(x, 0) != x) return bad("additive identity", {x});
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (r.add(x, y) != r.add(y, x)) return bad("additive commutativity", {x, y});
  for (Elem x = 0; x < n; ++x)
    if (r.add(x, r.neg(x)) != 0) return bad("additive inverse", {x});

  const auto& gens = r.additive_generators();
  // Light's test over a generating set: every element is a left-nested sum
  // of generators, so middles in `gens` suffice.
  for (Elem x = 0; x < n; ++x)
    for (Elem s : gens)
      for (Elem y = 0; y < n; ++y)
        if (r.add(r.add(x, s), y) != r.add(x, r.add(s, y)))
          return bad("additive associativity", {x, s, y});

  // Distributivity: left/right multiplication maps must be additive, which
  // is checked against the generators in the second slot.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem s : gens) {
        if (r.mul(a, r.add(b, s)) != r.add(r.mul(a, b), r.mul(a, s)))
          return bad("left distributivity", {a, b, s});
        if (r.mul(r.add(b, s), a) != r.add(r.mul(b, a), r.mul(s, a)))
          return bad("right distributivity", {a, b, s});
      }

  for (Elem a : gens)
    for (Elem b : gens)
      for (Elem c : gens)
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return bad("multiplicative associativity", {a, b, c});

  auto is_unity = [&](Elem e) {
    for (Elem s : gens)
      if (r.mul(e, s) != s || r.mul(s, e) != s) return false;
    return true;
  };
  if (r.unity()) {
    if (!is_unity(*r.unity())) return bad("declared unity", {*r.unity()});
    out.unity = r.unity();
  } else {
    for (Elem e = 0; e < n && !out.unity; ++e)
      if (is_unity(e)) out.unity = e;
  }
  // With only the zero element the generating set is empty; zero is unity.
  if (n == 1) out.unity = Elem{0};

  for (Elem a : gens)
    for (Elem b : gens)
      if (r.mul(a, b) != r.mul(b, a) && !out.noncommuting) {
        out.commutative = false;
        out.noncommuting = std::pair{a, b};
      }
  return out;
}

ElementSet additive_span(const FiniteRing& r, std::span<const Elem> gens) {
  std::vector<char> seen;
  const auto reached = reach_from_zero(r.add_table(), r.order(), gens, seen);
  return ElementSet::of(r.order(), reached);
}

FiniteRing make_zn(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidOrder, "Z_n requires n >= 1");
  check_cap(n, kMaxCarrier, "Z_n");
  FiniteRing::Table add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  }
  return finish(FiniteRing::from_tables(n, std::move(add), std::move(mul),
                                        static_cast<Elem>(1 % n), std::move(names),
                                        {RingShape::Kind::Zn, n, 0, 0}));
}

FiniteRing make_gaussian(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidOrder, "Z_n[i] requires n >= 1");
  const std::size_t order = n * n;
  check_cap(order, kMaxCarrier, "Z_n[i]");
  FiniteRing::Table add(order * order), mul(order * order);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / n, b = x % n;
    names.push_back(gaussian_name(a, b));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y / n, d = y % n;
      add[x * order + y] = static_cast<std::uint16_t>(((a + c) % n) * n + (b + d) % n);
      const std::size_t re = (a * c + n * n - (b * d) % n) % n;
      const std::size_t im = (a * d + b * c) % n;
      mul[x * order + y] = static_cast<std::uint16_t>(re * n + im);
    }
  }
  return finish(FiniteRing::from_tables(order, std::move(add), std::move(mul),
                                        static_cast<Elem>((1 % n) * n),
                                        std::move(names),
                                        {RingShape::Kind::Gaussian, n, 0, 0}));
}

std::vector<Elem> matrix_entries(const FiniteRing& m, Elem a) {
  const std::size_t k = m.shape().param, q = m.shape().left;
  std::vector<Elem> e(k * k);
  std::size_t v = a;
  for (std::size_t i = k * k; i-- > 0;) {
    e[i] = static_cast<Elem>(v % q);
    v /= q;
  }
  return e;
}

Elem matrix_from_entries(const FiniteRing& m, std::span<const Elem> entries) {
  const std::size_t q = m.shape().left;
  std::size_t v = 0;
  for (Elem x : entries) v = v * q + x;
  return static_cast<Elem>(v);
}

FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t k,
                            std::size_t carrier_cap) {
  if (k == 0) fail(ErrorKind::InvalidOrder, "matrix size must be >= 1");
  const std::size_t q = base.order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < k * k; ++i) {
    order *= q;
    check_cap(order, carrier_cap, "matrix ring");
  }
  const std::size_t kk = k * k;
  std::vector<Elem> entries(order * kk);
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t v = a;
    for (std::size_t i = kk; i-- > 0;) {
      entries[a * kk + i] = static_cast<Elem>(v % q);
      v /= q;
    }
  }
  auto encode = [&](const Elem* e) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < kk; ++i) v = v * q + e[i];
    return static_cast<std::uint16_t>(v);
  };

  FiniteRing::Table add(order * order), mul(order * order);
  std::vector<Elem> buf(kk);
  for (std::size_t a = 0; a < order; ++a) {
    const Elem* ea = &entries[a * kk];
    for (std::size_t b = 0; b < order; ++b) {
      const Elem* eb = &entries[b * kk];
      for (std::size_t i = 0; i < kk; ++i) buf[i] = base.add(ea[i], eb[i]);
      add[a * order + b] = encode(buf.data());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Elem acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            acc = base.add(acc, base.mul(ea[i * k + l], eb[l * k + j]));
          buf[i * k + j] = acc;
        }
      mul[a * order + b] = encode(buf.data());
    }
  }

  std::vector<std::string> names;
  names.reserve(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < k; ++j) {
        if (j) s += ",";
        s += base.name(entries[a * kk + i * k + j]);
      }
      s += "]";
    }
    names.push_back(s + "]");
  }

  std::optional<Elem> unity;
  if (base.unity()) {
    std::vector<Elem> id(kk, 0);
    for (std::size_t i = 0; i < k; ++i) id[i * k + i] = *base.unity();
    unity = encode(id.data());
  }
  return finish(FiniteRing::from_tables(order, std::move(add), std::move(mul), unity,
                                        std::move(names),
                                        {RingShape::Kind::Matrix, k, q, 0}));
}

FiniteRing make_product_ring(const FiniteRing& r, const FiniteRing& t,
                             std::size_t carrier_cap) {
  const std::size_t m = r.order(), n = t.order(), order = m * n;
  check_cap(order, carrier_cap, "product ring");
  FiniteRing::Table add(order * order), mul(order * order);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    const Elem ar = static_cast<Elem>(a / n), at = static_cast<Elem>(a % n);
    names.push_back("(" + r.name(ar) + "," + t.name(at) + ")");
    for (std::size_t b = 0; b < order; ++b) {
      const Elem br = static_cast<Elem>(b / n), bt = static_cast<Elem>(b % n);
      add[a * order + b] = static_cast<std::uint16_t>(r.add(ar, br) * n + t.add(at, bt));
      mul[a * order + b] = static_cast<std::uint16_t>(r.mul(ar, br) * n + t.mul(at, bt));
    }
  }
  std::optional<Elem> unity;
  if (r.unity() && t.unity()) unity = static_cast<Elem>(*r.unity() * n + *t.unity());
  return finish(FiniteRing::from_tables(order, std::move(add), std::move(mul), unity,
                                        std::move(names),
                                        {RingShape::Kind::Product, 0, m, n}));
}

FiniteRing make_table_ring(const std::vector<std::vector<int>>& add,
                           const std::vector<std::vector<int>>& mul,
                           std::vector<std::string> names) {
  const std::size_t n = add.size();
  if (n == 0 || mul.size() != n)
    fail(ErrorKind::MalformedTable, "add and mul tables must be square of equal order");
  check_cap(n, kMaxCarrier, "table ring");
  FiniteRing::Table a(n * n), m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      fail(ErrorKind::MalformedTable, "add and mul tables must be square of equal order");
    for (std::size_t j = 0; j < n; ++j) {
      if (add[i][j] < 0 || mul[i][j] < 0 || static_cast<std::size_t>(add[i][j]) >= n ||
          static_cast<std::size_t>(mul[i][j]) >= n)
        fail(ErrorKind::MalformedTable, "table entry out of range");
      a[i * n + j] = static_cast<std::uint16_t>(add[i][j]);
      m[i * n + j] = static_cast<std::uint16_t>(mul[i][j]);
    }
  }
  auto r = FiniteRing::from_tables(n, std::move(a), std::move(m), std::nullopt,
                                   std::move(names), {RingShape::Kind::Table, 0, 0, 0});
  const auto v = validate_ring(r);
  if (!v.report.ok) {
    std::ostringstream os;
    os << "ring axiom failure: " << v.report.violation << " at (";
    for (std::size_t i = 0; i < v.report.witness.size(); ++i)
      os << (i ? "," : "") << v.report.witness[i];
    os << ")";
    fail(ErrorKind::Validation, os.str());
  }
  r.set_unity(v.unity);
  r.set_commutative(v.commutative);
  return r;
}

FiniteRing finalize_ring(FiniteRing r) { return finish(std::move(r)); }

void check_carrier_cap(std::size_t order, std::size_t cap, const char* what) {
  check_cap(order, cap, what);
}

}  // namespace grw
