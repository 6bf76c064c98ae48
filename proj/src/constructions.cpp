#include "grw/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "grw/error.hpp"

namespace grw {
namespace {

IdealSubset make_ideal(const GradedRing& gr, ElementSet members) {
  const bool graded = is_graded_ideal(gr, members).graded;
  return IdealSubset(gr.ring(), std::move(members), Sidedness::TwoSided, graded);
}

// Greedy generators of (M, +): each element is a left-nested sum of them.
std::vector<Elem> module_generators(const GradedBimodule& m) {
  std::vector<Elem> gens;
  std::vector<char> reached(m.order, 0);
  reached[0] = 1;
  for (Elem a = 0; a < m.order; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    std::vector<Elem> all;
    for (Elem b = 0; b < m.order; ++b)
      if (reached[b]) all.push_back(b);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (Elem g : gens) {
        const Elem c = m.plus(all[i], g);
        if (!reached[c]) {
          reached[c] = 1;
          all.push_back(c);
        }
      }
  }
  return gens;
}

}  // namespace

bool GradedRingHom::surjective() const {
  std::vector<char> hit(target_->order(), 0);
  for (Elem v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

ValidationReport validate_graded_hom(const GradedRingHom& f) {
  const auto& s = f.source().ring();
  const auto& t = f.target().ring();
  if (f.table().size() != s.order())
    fail(ErrorKind::MalformedTable, "homomorphism table does not cover the source");
  for (Elem v : f.table())
    if (v >= t.order()) fail(ErrorKind::MalformedTable, "homomorphism value out of range");
  if (!(f.source().group() == f.target().group()))
    return ValidationReport::failure("grading groups differ");
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b) {
      if (f(s.add(a, b)) != t.add(f(a), f(b))) return ValidationReport::failure("not additive", {a, b});
      if (f(s.mul(a, b)) != t.mul(f(a), f(b)))
        return ValidationReport::failure("not multiplicative", {a, b});
    }
  for (Elem g = 0; g < f.source().group().order(); ++g) {
    std::optional<Elem> bad;
    f.source().component(g).for_each([&](Elem a) {
      if (!bad && !f.target().component(g).contains(f(a))) bad = a;
    });
    if (bad) return ValidationReport::failure("f(R_g) not within T_g", {*bad, g});
  }
  return ValidationReport::success();
}

IdealSubset hom_kernel(const GradedRingHom& f) {
  ElementSet k(f.source().order());
  for (Elem a = 0; a < f.source().order(); ++a)
    if (f(a) == 0) k.insert(a);
  return make_ideal(f.source(), std::move(k));
}

IdealSubset hom_image(const GradedRingHom& f, const IdealSubset& p) {
  if (!f.surjective()) fail(ErrorKind::Precondition, "image transport needs a surjective map");
  if (!hom_kernel(f).members().is_subset_of(p.members()))
    fail(ErrorKind::Precondition, "image transport needs Ker(f) inside P");
  ElementSet img(f.target().order());
  p.members().for_each([&](Elem a) { img.insert(f(a)); });
  if (!is_closed(f.target().ring(), img, Sidedness::TwoSided))
    fail(ErrorKind::Validation, "f(P) is not an ideal");
  return make_ideal(f.target(), std::move(img));
}

IdealSubset hom_preimage(const GradedRingHom& f, const IdealSubset& i) {
  ElementSet pre(f.source().order());
  for (Elem a = 0; a < f.source().order(); ++a)
    if (i.contains(f(a))) pre.insert(a);
  if (!is_closed(f.source().ring(), pre, Sidedness::TwoSided))
    fail(ErrorKind::Validation, "preimage is not an ideal");
  return make_ideal(f.source(), std::move(pre));
}

GradedRingHom product_projection(const GradedRingPtr& product, const GradedRingPtr& left,
                                 const GradedRingPtr& right, int which) {
  const std::size_t n = right->order();
  if (product->order() != left->order() * n)
    fail(ErrorKind::Precondition, "ring is not the product of the given factors");
  std::vector<Elem> map(product->order());
  for (std::size_t a = 0; a < map.size(); ++a)
    map[a] = static_cast<Elem>(which == 0 ? a / n : a % n);
  return GradedRingHom(product, which == 0 ? left : right, std::move(map));
}

Quotient make_quotient(const GradedRingPtr& gr, const IdealSubset& k, std::string label) {
  const auto& r = gr->ring();
  if (k.members().universe() != r.order())
    fail(ErrorKind::Precondition, "ideal belongs to a different ring");
  if (!is_closed(r, k.members(), Sidedness::TwoSided))
    fail(ErrorKind::Precondition, "quotient needs a two-sided ideal");
  if (!is_graded_ideal(*gr, k.members()).graded)
    fail(ErrorKind::Precondition, "quotient needs a graded ideal");

  // Coset of a is a + K; its minimal member is the representative.
  const std::size_t n = r.order();
  std::vector<int> coset(n, -1);
  std::vector<Elem> reps;
  const auto kmembers = k.members().elements();
  for (Elem a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (Elem m : kmembers) coset[r.add(a, m)] = id;
  }
  const std::size_t q = reps.size();
  FiniteRing::Table add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = static_cast<std::uint16_t>(coset[r.add(reps[i], reps[j])]);
      mul[i * q + j] = static_cast<std::uint16_t>(coset[r.mul(reps[i], reps[j])]);
    }
  std::vector<std::string> names;
  for (Elem a : reps) names.push_back(r.name(a));
  std::optional<Elem> unity;
  if (r.unity()) unity = static_cast<Elem>(coset[*r.unity()]);
  auto ring = std::make_shared<const FiniteRing>(finalize_ring(FiniteRing::from_tables(
      q, std::move(add), std::move(mul), unity, std::move(names),
      {RingShape::Kind::Quotient, 0, n, q})));

  std::vector<ElementSet> comps;
  for (Elem g = 0; g < gr->group().order(); ++g) {
    ElementSet c(q);
    gr->component(g).for_each([&](Elem a) { c.insert(static_cast<std::size_t>(coset[a])); });
    comps.push_back(std::move(c));
  }
  auto qr = std::make_shared<const GradedRing>(ring, Grading(gr->group(), std::move(comps)),
                                               std::move(label));
  std::vector<Elem> map(n);
  for (Elem a = 0; a < n; ++a) map[a] = static_cast<Elem>(coset[a]);
  return {qr, GradedRingHom(gr, qr, std::move(map))};
}

ValidationReport validate_bimodule(const GradedRing& gr, const GradedBimodule& m) {
  const auto& r = gr.ring();
  const std::size_t n = m.order, rn = r.order();
  if (n == 0 || m.add.size() != n * n || m.left.size() != rn * n || m.right.size() != n * rn ||
      m.ring_order != rn)
    fail(ErrorKind::MalformedTable, "bimodule tables do not match the ring and module orders");
  if (m.components.size() != gr.group().order())
    fail(ErrorKind::MalformedTable, "bimodule grading must have one component per group element");
  for (Elem v : m.add)
    if (v >= n) fail(ErrorKind::MalformedTable, "bimodule table entry out of range");
  for (Elem v : m.left)
    if (v >= n) fail(ErrorKind::MalformedTable, "bimodule table entry out of range");
  for (Elem v : m.right)
    if (v >= n) fail(ErrorKind::MalformedTable, "bimodule table entry out of range");

  auto bad = [](std::string what, std::vector<Elem> w) {
    return ValidationReport::failure("bimodule: " + what, std::move(w));
  };
  for (Elem a = 0; a < n; ++a) {
    if (m.plus(0, a) != a || m.plus(a, 0) != a) return bad("zero is not neutral", {a});
    bool inv = false;
    for (Elem b = 0; b < n && !inv; ++b) inv = m.plus(a, b) == 0;
    if (!inv) return bad("missing additive inverse", {a});
  }
  const auto gens = module_generators(m);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (m.plus(a, b) != m.plus(b, a)) return bad("addition not commutative", {a, b});
      for (Elem g : gens)
        if (m.plus(m.plus(a, b), g) != m.plus(a, m.plus(b, g)))
          return bad("addition not associative", {a, b, g});
    }
  const auto& rgens = r.additive_generators();
  for (Elem x = 0; x < rn; ++x)
    for (Elem a = 0; a < n; ++a) {
      for (Elem g : gens) {
        if (m.act_left(x, m.plus(a, g)) != m.plus(m.act_left(x, a), m.act_left(x, g)))
          return bad("left action not additive in M", {x, a, g});
        if (m.act_right(m.plus(a, g), x) != m.plus(m.act_right(a, x), m.act_right(g, x)))
          return bad("right action not additive in M", {a, g, x});
      }
      for (Elem h : rgens) {
        if (m.act_left(r.add(x, h), a) != m.plus(m.act_left(x, a), m.act_left(h, a)))
          return bad("left action not additive in R", {x, h, a});
        if (m.act_right(a, r.add(x, h)) != m.plus(m.act_right(a, x), m.act_right(a, h)))
          return bad("right action not additive in R", {a, x, h});
      }
    }
  // Every identity below is additive in each argument, so generators suffice.
  for (Elem x : rgens)
    for (Elem y : rgens)
      for (Elem a : gens) {
        if (m.act_left(r.mul(x, y), a) != m.act_left(x, m.act_left(y, a)))
          return bad("(rs)m != r(sm)", {x, y, a});
        if (m.act_right(a, r.mul(x, y)) != m.act_right(m.act_right(a, x), y))
          return bad("m(rs) != (mr)s", {a, x, y});
        if (m.act_right(m.act_left(x, a), y) != m.act_left(x, m.act_right(a, y)))
          return bad("(rm)s != r(ms)", {x, a, y});
      }
  if (r.unity())
    for (Elem a = 0; a < n; ++a)
      if (m.act_left(*r.unity(), a) != a || m.act_right(a, *r.unity()) != a)
        return bad("unity does not act as identity", {a});

  const auto& grp = gr.group();
  std::size_t product = 1;
  ElementSet span(n);
  span.insert(0);
  for (Elem g = 0; g < grp.order(); ++g) {
    const auto& c = m.components[g];
    if (c.universe() != n) fail(ErrorKind::MalformedTable, "bimodule component over the wrong carrier");
    if (!c.contains(0)) return bad("component missing zero", {g});
    bool closed = true;
    c.for_each([&](Elem a) {
      c.for_each([&](Elem b) {
        if (!c.contains(m.plus(a, b))) closed = false;
      });
    });
    if (!closed) return bad("component not a subgroup", {g});
    product *= c.count();
    if (product > (std::size_t{1} << 40)) break;
    ElementSet next(n);
    span.for_each([&](Elem s) { c.for_each([&](Elem a) { next.insert(m.plus(s, a)); }); });
    span = std::move(next);
  }
  if (product != n || span.count() != n) return bad("components are not a direct sum", {});
  for (Elem g = 0; g < grp.order(); ++g)
    for (Elem h = 0; h < grp.order(); ++h) {
      std::optional<std::vector<Elem>> w;
      gr.component(g).for_each([&](Elem x) {
        m.components[h].for_each([&](Elem a) {
          if (w) return;
          if (!m.components[grp.op(g, h)].contains(m.act_left(x, a))) w = {x, a};
          else if (!m.components[grp.op(h, g)].contains(m.act_right(a, x))) w = {a, x};
        });
      });
      if (w) return bad("action leaves the graded components", *w);
    }
  return ValidationReport::success();
}

GradedBimodule regular_bimodule(const GradedRing& gr) {
  const auto& r = gr.ring();
  GradedBimodule m;
  m.order = m.ring_order = r.order();
  m.add.assign(r.add_table().begin(), r.add_table().end());
  m.left.assign(r.mul_table().begin(), r.mul_table().end());
  m.right = m.left;
  m.components = gr.grading().components();
  m.names = r.names();
  m.label = gr.label();
  return m;
}

GradedBimodule quotient_bimodule(const GradedRing& gr, const IdealSubset& k) {
  auto base = std::make_shared<const GradedRing>(gr);
  auto q = make_quotient(base, k);
  const auto& qr = q.ring->ring();
  const auto& pi = q.projection;
  GradedBimodule m;
  m.order = qr.order();
  m.ring_order = gr.order();
  m.add.assign(qr.add_table().begin(), qr.add_table().end());
  m.left.resize(gr.order() * m.order);
  m.right.resize(m.order * gr.order());
  for (Elem x = 0; x < gr.order(); ++x)
    for (Elem a = 0; a < m.order; ++a) {
      m.left[std::size_t{x} * m.order + a] = qr.mul(pi(x), a);
      m.right[std::size_t{a} * gr.order() + x] = qr.mul(a, pi(x));
    }
  m.components = q.ring->grading().components();
  m.names = qr.names();
  return m;
}

Idealization make_idealization(const GradedRingPtr& gr, const GradedBimodule& m,
                               std::size_t carrier_cap, std::string label) {
  const auto& r = gr->ring();
  const std::size_t rn = r.order(), mn = m.order, order = rn * mn;
  check_carrier_cap(order, carrier_cap, "idealization");
  if (auto rep = validate_bimodule(*gr, m); !rep.ok) {
    std::ostringstream os;
    os << rep.violation << " at (";
    for (std::size_t i = 0; i < rep.witness.size(); ++i) os << (i ? "," : "") << rep.witness[i];
    os << ")";
    fail(ErrorKind::Validation, os.str());
  }
  FiniteRing::Table add(order * order), mul(order * order);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    const Elem x = static_cast<Elem>(a / mn), p = static_cast<Elem>(a % mn);
    names.push_back("(" + r.name(x) + "," + m.names[p] + ")");
    for (std::size_t b = 0; b < order; ++b) {
      const Elem y = static_cast<Elem>(b / mn), q = static_cast<Elem>(b % mn);
      add[a * order + b] = static_cast<std::uint16_t>(r.add(x, y) * mn + m.plus(p, q));
      mul[a * order + b] = static_cast<std::uint16_t>(
          r.mul(x, y) * mn + m.plus(m.act_left(x, q), m.act_right(p, y)));
    }
  }
  std::optional<Elem> unity;
  if (r.unity()) unity = static_cast<Elem>(*r.unity() * mn);
  auto ring = std::make_shared<const FiniteRing>(finalize_ring(FiniteRing::from_tables(
      order, std::move(add), std::move(mul), unity, std::move(names),
      {RingShape::Kind::Idealization, 0, rn, mn})));
  std::vector<ElementSet> comps;
  for (Elem g = 0; g < gr->group().order(); ++g) {
    ElementSet c(order);
    gr->component(g).for_each([&](Elem x) {
      m.components[g].for_each([&](Elem p) { c.insert(std::size_t{x} * mn + p); });
    });
    comps.push_back(std::move(c));
  }
  Idealization out;
  out.ring = std::make_shared<const GradedRing>(ring, Grading(gr->group(), std::move(comps)),
                                                std::move(label));
  out.base = gr;
  out.module = m;
  return out;
}

IdealSubset embed_ideal_in_idealization(const Idealization& x, const IdealSubset& p) {
  const std::size_t mn = x.module.order;
  ElementSet s(x.ring->order());
  p.members().for_each([&](Elem a) {
    for (std::size_t m = 0; m < mn; ++m) s.insert(std::size_t{a} * mn + m);
  });
  if (!is_closed(x.ring->ring(), s, Sidedness::TwoSided))
    fail(ErrorKind::Validation, "P x M is not an ideal");
  return make_ideal(*x.ring, std::move(s));
}

}  // namespace grw
