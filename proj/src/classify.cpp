#include "grw/classify.hpp"

#include <chrono>
#include <functional>

#include "grw/error.hpp"
#include "grw/reference.hpp"

namespace grw {
namespace {

Verdict falsified(std::vector<Elem> elems) {
  Verdict v;
  v.truth = Truth::False;
  v.elements = std::move(elems);
  return v;
}

Verdict falsified(std::vector<IdealSubset> ideals) {
  Verdict v;
  v.truth = Truth::False;
  v.ideals = std::move(ideals);
  return v;
}

void require_graded(const IdealSubset& p) {
  if (!p.graded()) fail(ErrorKind::Precondition, "ideal is not graded");
}

void require_component_proper(const RingContext& ctx, const IdealSubset& p, Elem g) {
  if (g >= ctx.graded().group().order())
    fail(ErrorKind::Precondition, "degree outside the grading group");
  if (ctx.graded().component(g).is_subset_of(p.members()))
    fail(ErrorKind::Precondition, "P_g = R_g for g = " + ctx.graded().group().name(g));
}

std::vector<Elem> as_elems(const Triple& t) { return {t.x, t.y, t.z}; }

std::vector<std::size_t> positions_in(const RingContext& ctx, const ElementSet& s, Elem g) {
  std::vector<std::size_t> out;
  const auto& hs = ctx.graded().homogeneous_order();
  for (std::size_t pos : ctx.degree_positions(g))
    if (s.contains(hs[pos])) out.push_back(pos);
  return out;
}

// Products of all generator tuples, one factor from each part.
template <class F>
bool all_generator_products(const FiniteRing& r, std::span<const std::vector<Elem>> gens, F&& ok) {
  std::function<bool(std::size_t, Elem)> rec = [&](std::size_t i, Elem acc) {
    if (i == gens.size()) return ok(acc);
    for (Elem a : gens[i])
      if (!rec(i + 1, i == 0 ? a : r.mul(acc, a))) return false;
    return true;
  };
  return rec(0, 0);
}

}  // namespace

RingContext::RingContext(GradedRingPtr gr, std::size_t ideal_cap) : gr_(std::move(gr)), cap_(ideal_cap) {
  const auto& hs = gr_->homogeneous_order();
  all_.resize(hs.size());
  by_degree_.assign(gr_->group().order(), {});
  for (std::size_t i = 0; i < hs.size(); ++i) {
    all_[i] = i;
    for (Elem g = 0; g < gr_->group().order(); ++g)
      if (gr_->component(g).contains(hs[i])) by_degree_[g].push_back(i);
  }
}

const IdealLattice& RingContext::lattice(Sidedness side) const {
  std::lock_guard lock(mu_);
  auto& slot = side == Sidedness::Left ? left_ : side == Sidedness::Right ? right_ : two_sided_;
  if (!slot) slot = std::make_unique<IdealLattice>(*gr_, side, cap_);
  return *slot;
}

const InterleaveTable& RingContext::homogeneous_table() const {
  std::lock_guard lock(mu_);
  if (!hom_) hom_ = std::make_unique<InterleaveTable>(*gr_, gr_->homogeneous_order());
  return *hom_;
}

const InterleaveTable& RingContext::identity_table() const {
  std::lock_guard lock(mu_);
  if (!ident_) {
    const auto id = gr_->group().identity();
    ident_ = std::make_unique<InterleaveTable>(*gr_, gr_->component(id).elements());
  }
  return *ident_;
}

const ContainmentRows& RingContext::good_rows(const ElementSet& p, bool identity) const {
  const auto& table = identity ? identity_table() : homogeneous_table();
  std::lock_guard lock(mu_);
  auto& cache = identity ? good_ident_ : good_hom_;
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<ContainmentRows>(table, p);
  return *slot;
}

void require_proper(const RingContext& ctx, const IdealSubset& p) {
  if (p.members().count() == ctx.ring().order())
    fail(ErrorKind::NotProper, "P = R is not a proper ideal");
}

namespace {

Verdict ideal_pairs(const RingContext& ctx, const IdealSubset& p, bool weakly) {
  require_graded(p);
  require_proper(ctx, p);
  const auto& lat = ctx.lattice(Sidedness::TwoSided);
  const auto& pm = p.members();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.subset_of(i, pm)) continue;
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (lat.subset_of(j, pm)) continue;
      const std::size_t ij = lat.product(i, j);
      if (!lat.subset_of(ij, pm)) continue;
      if (weakly && ij == lat.zero()) continue;
      return falsified(std::vector<IdealSubset>{lat[i], lat[j]});
    }
  }
  return Verdict::yes();
}

Verdict homogeneous_scan(const RingContext& ctx, const IdealSubset& p, TripleRule rule) {
  require_graded(p);
  require_proper(ctx, p);
  const auto& t = ctx.homogeneous_table();
  const auto& good = ctx.good_rows(p.members(), false);
  const auto& all = ctx.all_positions();
  if (auto hit = first_triple(t, good, p.members(), rule, all, all, all))
    return falsified(as_elems(*hit));
  return Verdict::yes();
}

}  // namespace

Verdict is_graded_prime(const RingContext& ctx, const IdealSubset& p) {
  return ideal_pairs(ctx, p, false);
}

Verdict is_graded_weakly_prime(const RingContext& ctx, const IdealSubset& p) {
  return ideal_pairs(ctx, p, true);
}

Verdict is_graded_2_absorbing(const RingContext& ctx, const IdealSubset& p) {
  return homogeneous_scan(ctx, p, TripleRule::TwoAbsorbing);
}

Verdict is_graded_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p) {
  return homogeneous_scan(ctx, p, TripleRule::WeaklyTwoAbsorbing);
}

Verdict is_graded_completely_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p) {
  return homogeneous_scan(ctx, p, TripleRule::CompletelyWeakly);
}

Verdict is_graded_strongly_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p) {
  require_graded(p);
  require_proper(ctx, p);
  const auto& lat = ctx.lattice(Sidedness::TwoSided);
  const auto& pm = p.members();
  const std::size_t n = lat.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = lat.product(a, b);
      if (lat.subset_of(ab, pm)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t abc = lat.product(ab, c);
        if (abc == lat.zero() || !lat.subset_of(abc, pm)) continue;
        if (lat.subset_of(lat.product(a, c), pm) || lat.subset_of(lat.product(b, c), pm)) continue;
        return falsified(std::vector<IdealSubset>{lat[a], lat[b], lat[c]});
      }
    }
  return Verdict::yes();
}

Verdict is_g_weakly_2_absorbing(const RingContext& ctx, const IdealSubset& p, Elem g,
                                DegreeMode mode) {
  require_graded(p);
  require_component_proper(ctx, p, g);
  const auto& t = ctx.identity_table();
  const auto& good = ctx.good_rows(p.members(), true);
  const auto& pos = ctx.degree_positions(g);
  const auto rule =
      mode == DegreeMode::Weakly ? TripleRule::WeaklyTwoAbsorbing : TripleRule::TwoAbsorbing;
  Verdict v;
  if (auto hit = first_triple(t, good, p.members(), rule, pos, pos, pos))
    v = falsified(as_elems(*hit));
  v.degree = g;
  return v;
}

TripleZeroScan find_g_triple_zeros(const RingContext& ctx, const IdealSubset& p, Elem g) {
  require_graded(p);
  require_component_proper(ctx, p, g);
  const auto& t = ctx.identity_table();
  const auto& good = ctx.good_rows(p.members(), true);
  const auto& pos = ctx.degree_positions(g);
  TripleZeroScan out;
  out.triples = all_triples(t, good, p.members(), TripleRule::TripleZero, pos, pos, pos);
  out.weakly = is_g_weakly_2_absorbing(ctx, p, g, DegreeMode::Weakly).holds();
  return out;
}

bool component_product_within(const RingContext& ctx, std::span<const ElementSet* const> parts,
                              const ElementSet& p) {
  std::vector<std::vector<Elem>> gens;
  for (const auto* s : parts) gens.push_back(subgroup_generators(ctx.ring(), *s));
  for (const auto& g : gens)
    if (g.empty()) return true;  // a zero factor
  return all_generator_products(ctx.ring(), gens, [&](Elem v) { return p.contains(v); });
}

bool component_product_nonzero(const RingContext& ctx, std::span<const ElementSet* const> parts) {
  std::vector<std::vector<Elem>> gens;
  for (const auto* s : parts) gens.push_back(subgroup_generators(ctx.ring(), *s));
  for (const auto& g : gens)
    if (g.empty()) return false;
  return !all_generator_products(ctx.ring(), gens, [](Elem v) { return v == 0; });
}

Verdict is_free_g_triple_zero(const RingContext& ctx, const IdealSubset& p,
                              const IdealSubset& a, const IdealSubset& b,
                              const IdealSubset& k, Elem g) {
  require_graded(p);
  require_component_proper(ctx, p, g);
  const auto& gr = ctx.graded();
  const ElementSet ag = graded_component(gr, a, g), bg = graded_component(gr, b, g),
                   kg = graded_component(gr, k, g);
  const ElementSet* parts[] = {&ag, &bg, &kg};
  if (!component_product_within(ctx, parts, p.members()))
    fail(ErrorKind::Precondition, "A_g B_g K_g is not contained in P");
  const auto xs = positions_in(ctx, ag, g), ys = positions_in(ctx, bg, g),
             zs = positions_in(ctx, kg, g);
  const auto& t = ctx.identity_table();
  const auto& good = ctx.good_rows(p.members(), true);
  Verdict v;
  if (auto hit = first_triple(t, good, p.members(), TripleRule::TripleZero, xs, ys, zs))
    v = falsified(as_elems(*hit));
  v.degree = g;
  return v;
}

const PredicateOutcome* ClassificationReport::find(const std::string& name) const {
  for (const auto& p : predicates)
    if (p.name == name) return &p;
  return nullptr;
}

ClassificationReport classify_ideal(const RingContext& ctx, const IdealSubset& p,
                                    const std::vector<Elem>& degrees) {
  ClassificationReport rep;
  rep.graded = p.graded();
  rep.proper = p.members().count() != ctx.ring().order();

  using Fn = Verdict (*)(const RingContext&, const IdealSubset&);
  const std::pair<const char*, Fn> table[] = {
      {"graded-prime", is_graded_prime},
      {"graded-weakly-prime", is_graded_weakly_prime},
      {"graded-2-absorbing", is_graded_2_absorbing},
      {"graded-weakly-2-absorbing", is_graded_weakly_2_absorbing},
      {"graded-completely-weakly-2-absorbing", is_graded_completely_weakly_2_absorbing},
      {"graded-strongly-weakly-2-absorbing", is_graded_strongly_weakly_2_absorbing},
  };
  for (const auto& [name, fn] : table) {
    PredicateOutcome out{name, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    if (!rep.graded) {
      out.verdict = Verdict::skipped("ideal is not graded");
    } else if (!rep.proper) {
      out.verdict = Verdict::skipped("not proper");
    } else {
      try {
        out.verdict = fn(ctx, p);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeLimit) throw;
        out.verdict = Verdict::skipped(std::string("cap exceeded: ") + e.what());
      }
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.predicates.push_back(std::move(out));
  }

  if (!rep.graded) return rep;
  std::vector<Elem> gs = degrees;
  if (gs.empty())
    for (Elem g = 0; g < ctx.graded().group().order(); ++g) gs.push_back(g);
  for (Elem g : gs) {
    DegreeOutcome d;
    d.degree = g;
    if (g >= ctx.graded().group().order())
      fail(ErrorKind::Precondition, "degree outside the grading group");
    d.applicable = !ctx.graded().component(g).is_subset_of(p.members());
    if (!d.applicable) {
      d.weakly = d.plain = Verdict::skipped("P_g = R_g");
    } else {
      try {
        d.weakly = is_g_weakly_2_absorbing(ctx, p, g, DegreeMode::Weakly);
        d.plain = is_g_weakly_2_absorbing(ctx, p, g, DegreeMode::Plain);
        d.triple_zeros = find_g_triple_zeros(ctx, p, g).triples.size();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeLimit) throw;
        d.weakly = d.plain = Verdict::skipped(std::string("cap exceeded: ") + e.what());
      }
    }
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

namespace {

bool pairs_outside(const FiniteRing& r, const ElementSet& p, Elem x, Elem y, Elem z) {
  return !p.contains(r.mul(x, y)) && !p.contains(r.mul(y, z)) && !p.contains(r.mul(x, z));
}

}  // namespace

bool verify_witness(const RingContext& ctx, const IdealSubset& p, const std::string& predicate,
                    const Verdict& v) {
  if (!v.fails()) return false;
  const auto& gr = ctx.graded();
  const auto& r = ctx.ring();
  const auto& pm = p.members();

  if (predicate == "graded-prime" || predicate == "graded-weakly-prime") {
    if (v.ideals.size() != 2) return false;
    const auto& i = v.ideals[0];
    const auto& j = v.ideals[1];
    for (const auto* s : {&i, &j}) {
      if (!is_closed(r, s->members(), Sidedness::TwoSided)) return false;
      if (!is_graded_ideal(gr, s->members()).graded) return false;
    }
    const auto ij = ideal_product(gr, i, j);
    if (!ij.members().is_subset_of(pm)) return false;
    if (predicate == "graded-weakly-prime" && ij.is_zero()) return false;
    return !i.members().is_subset_of(pm) && !j.members().is_subset_of(pm);
  }
  if (predicate == "graded-strongly-weakly-2-absorbing") {
    if (v.ideals.size() != 3) return false;
    for (const auto& s : v.ideals) {
      if (!is_closed(r, s.members(), Sidedness::TwoSided)) return false;
      if (!is_graded_ideal(gr, s.members()).graded) return false;
    }
    const auto& a = v.ideals[0];
    const auto& b = v.ideals[1];
    const auto& c = v.ideals[2];
    const auto abc = ideal_product(gr, ideal_product(gr, a, b), c);
    if (abc.is_zero() || !abc.members().is_subset_of(pm)) return false;
    return !ideal_product(gr, a, b).members().is_subset_of(pm) &&
           !ideal_product(gr, a, c).members().is_subset_of(pm) &&
           !ideal_product(gr, b, c).members().is_subset_of(pm);
  }

  if (v.elements.size() != 3) return false;
  const Elem x = v.elements[0], y = v.elements[1], z = v.elements[2];
  if (!pairs_outside(r, pm, x, y, z)) return false;

  if (predicate == "g-weakly-2-absorbing" || predicate == "g-2-absorbing" ||
      predicate == "g-triple-zero") {
    if (!v.degree) return false;
    const auto& comp = gr.component(*v.degree);
    if (!comp.contains(x) || !comp.contains(y) || !comp.contains(z)) return false;
    const auto re = gr.component(gr.group().identity()).elements();
    const auto s = reference::evaluate(r, pm, re, x, y, z);
    if (predicate == "g-triple-zero") return !s.nonzero;
    if (predicate == "g-2-absorbing") return s.contained;
    return s.contained && s.nonzero;
  }

  for (Elem e : v.elements)
    if (!gr.is_homogeneous(e)) return false;
  if (predicate == "graded-completely-weakly-2-absorbing") {
    const Elem xyz = r.mul(r.mul(x, y), z);
    return xyz != 0 && pm.contains(xyz);
  }
  const auto all = reference::carrier(r);
  const auto s = reference::evaluate(r, pm, all, x, y, z);
  if (predicate == "graded-2-absorbing") return s.contained;
  if (predicate == "graded-weakly-2-absorbing") return s.contained && s.nonzero;
  return false;
}

}  // namespace grw
