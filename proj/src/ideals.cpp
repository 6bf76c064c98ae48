#include "grw/ideals.hpp"

#include <algorithm>

#include "grw/error.hpp"

namespace grw {
namespace {

bool absorbs_left(Sidedness s) { return s == Sidedness::Left || s == Sidedness::TwoSided; }
bool absorbs_right(Sidedness s) { return s == Sidedness::Right || s == Sidedness::TwoSided; }

Sidedness product_side(Sidedness a, Sidedness b) {
  const bool l = absorbs_left(a), r = absorbs_right(b);
  if (l && r) return Sidedness::TwoSided;
  if (l) return Sidedness::Left;
  if (r) return Sidedness::Right;
  return Sidedness::SubgroupOnly;
}

}  // namespace

const char* to_string(Sidedness s) {
  switch (s) {
    case Sidedness::Left: return "left";
    case Sidedness::Right: return "right";
    case Sidedness::TwoSided: return "two-sided";
    case Sidedness::SubgroupOnly: return "subgroup";
  }
  return "unknown";
}

IdealSubset::IdealSubset(const FiniteRing& r, ElementSet members, Sidedness side, bool graded)
    : members_(std::move(members)), side_(side), graded_(graded) {
  generators_ = subgroup_generators(r, members_);
}

ElementSet close_ideal(const FiniteRing& r, ElementSet start, std::span<const Elem> extra,
                       Sidedness side) {
  ElementSet& h = start;
  std::vector<Elem> members = h.elements();
  std::vector<Elem> queue;
  const auto& ring_gens = r.additive_generators();

  // H + <g> as a union of cosets H + k g.
  auto adjoin = [&](Elem g) {
    if (h.contains(g)) return;
    const std::size_t base = members.size();
    Elem cur = g;
    while (!h.contains(cur)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem v = r.add(members[i], cur);
        h.insert(v);
        members.push_back(v);
        queue.push_back(v);
      }
      cur = r.add(cur, g);
    }
  };

  for (Elem g : extra) adjoin(g);
  while (!queue.empty()) {
    const Elem a = queue.back();
    queue.pop_back();
    for (Elem s : ring_gens) {
      if (absorbs_left(side)) adjoin(r.mul(s, a));
      if (absorbs_right(side)) adjoin(r.mul(a, s));
    }
  }
  return start;
}

IdealSubset generate_ideal(const GradedRing& gr, std::span<const Elem> gens, Sidedness side) {
  ElementSet zero(gr.order());
  zero.insert(0);
  auto members = close_ideal(gr.ring(), std::move(zero), gens, side);
  const bool graded = is_graded_ideal(gr, members).graded;
  return IdealSubset(gr.ring(), std::move(members), side, graded);
}

std::vector<Elem> homogeneous_generators(const GradedRing& gr, const IdealSubset& p) {
  std::vector<Elem> gens;
  ElementSet reached(gr.order());
  reached.insert(0);
  for (Elem a : gr.homogeneous_order()) {
    if (!p.contains(a) || reached.contains(a)) continue;
    gens.push_back(a);
    const Elem one[] = {a};
    reached = close_ideal(gr.ring(), std::move(reached), one, p.side());
  }
  if (gens.size() < 2) return gens;
  for (Elem a : gr.homogeneous_order()) {
    if (a == 0 || !p.contains(a)) continue;
    const Elem one[] = {a};
    ElementSet zero(gr.order());
    zero.insert(0);
    if (close_ideal(gr.ring(), std::move(zero), one, p.side()) == p.members()) return {a};
  }
  return gens;
}

bool is_closed(const FiniteRing& r, const ElementSet& members, Sidedness side) {
  if (!members.contains(0)) return false;
  const auto m = members.elements();
  for (Elem a : m) {
    if (!members.contains(r.neg(a))) return false;
    for (Elem b : m)
      if (!members.contains(r.add(a, b))) return false;
    for (Elem s = 0; s < r.order(); ++s) {
      if (absorbs_left(side) && !members.contains(r.mul(s, a))) return false;
      if (absorbs_right(side) && !members.contains(r.mul(a, s))) return false;
    }
  }
  return true;
}

GradedCheck is_graded_ideal(const GradedRing& gr, const ElementSet& members) {
  GradedCheck out;
  members.for_each([&](Elem a) {
    if (!out.graded) return;
    for (Elem c : gr.decompose(a))
      if (!members.contains(c)) {
        out.graded = false;
        out.witness = a;
        return;
      }
  });
  return out;
}

GradedCheck is_graded_ideal(const GradedRing& gr, const IdealSubset& p) {
  return is_graded_ideal(gr, p.members());
}

ElementSet graded_component(const GradedRing& gr, const IdealSubset& p, Elem g) {
  return p.members() & gr.component(g);
}

IdealSubset ideal_product(const GradedRing& gr, const IdealSubset& i, const IdealSubset& j) {
  const auto& r = gr.ring();
  std::vector<Elem> prods;
  for (Elem a : i.additive_generators())
    for (Elem b : j.additive_generators()) prods.push_back(r.mul(a, b));
  std::sort(prods.begin(), prods.end());
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  ElementSet zero(gr.order());
  zero.insert(0);
  auto members = close_ideal(r, std::move(zero), prods, Sidedness::SubgroupOnly);
  const bool graded = is_graded_ideal(gr, members).graded;
  return IdealSubset(r, std::move(members), product_side(i.side(), j.side()), graded);
}

std::vector<IdealSubset> enumerate_graded_ideals(const GradedRing& gr, Sidedness side,
                                                 std::size_t cap) {
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  ElementSet zero(gr.order());
  zero.insert(0);
  found.push_back(zero);
  seen.emplace(zero, 0);
  const auto& hs = gr.homogeneous_order();
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (Elem h : hs) {
      if (found[k].contains(h)) continue;
      const Elem one[] = {h};
      auto next = close_ideal(gr.ring(), found[k], one, side);
      if (seen.contains(next)) continue;
      if (found.size() >= cap)
        fail(ErrorKind::SizeLimit,
             "graded ideal enumeration exceeded the ideal cap of " + std::to_string(cap));
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<IdealSubset> out;
  out.reserve(found.size());
  for (auto& s : found) out.emplace_back(gr.ring(), std::move(s), side, true);
  return out;
}

IdealLattice::IdealLattice(const GradedRing& gr, Sidedness side, std::size_t cap)
    : side_(side), ideals_(enumerate_graded_ideals(gr, side, cap)) {
  for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].members(), i);
  whole_ = ideals_.size() - 1;
  const std::size_t n = ideals_.size();
  products_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = ideal_product(gr, ideals_[i], ideals_[j]);
      const auto at = find(p.members());
      if (!at) fail(ErrorKind::Validation, "product of graded ideals left the lattice");
      products_[i * n + j] = *at;
    }
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace grw
