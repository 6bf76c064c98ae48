#include "grw/reference.hpp"

namespace grw::reference {

std::vector<Elem> carrier(const FiniteRing& r) {
  std::vector<Elem> out(r.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

TripleState evaluate(const FiniteRing& r, const ElementSet& p, std::span<const Elem> middle,
                     Elem x, Elem y, Elem z) {
  TripleState s{true, false};
  for (Elem a : middle)
    for (Elem b : middle) {
      const Elem v = r.mul(r.mul(r.mul(r.mul(x, a), y), b), z);
      if (!p.contains(v)) s.contained = false;
      if (v != 0) s.nonzero = true;
    }
  return s;
}

Evaluator::Evaluator(const FiniteRing& r, const ElementSet& p, std::vector<Elem> middle)
    : r_(&r),
      p_(&p),
      middle_(std::move(middle)),
      memo_(std::size_t{r.order()} * r.order(), -1),
      scratch_(r.order()) {}

TripleState Evaluator::operator()(Elem x, Elem y, Elem z) {
  const auto& r = *r_;
  TripleState s{true, false};
  scratch_ = ElementSet(r.order());
  for (Elem a : middle_) scratch_.insert(r.mul(r.mul(x, a), y));
  scratch_.for_each([&](Elem w) {
    auto& m = memo_[std::size_t{w} * r.order() + z];
    if (m < 0) {
      m = 1;
      for (Elem b : middle_) {
        const Elem v = r.mul(r.mul(w, b), z);
        if (!p_->contains(v)) m &= ~1;
        if (v != 0) m |= 2;
      }
    }
    if (!(m & 1)) s.contained = false;
    if (m & 2) s.nonzero = true;
  });
  return s;
}

bool matches(const FiniteRing& r, const ElementSet& p, TripleRule rule, TripleState s, Elem x,
             Elem y, Elem z) {
  if (rule == TripleRule::ElementPrime)
    return s.contained && s.nonzero && !p.contains(x) && !p.contains(y) && !p.contains(z);
  if (rule == TripleRule::ContainedNonzero) return s.contained && s.nonzero;
  const bool pairs_out =
      !p.contains(r.mul(x, y)) && !p.contains(r.mul(y, z)) && !p.contains(r.mul(x, z));
  if (!pairs_out) return false;
  switch (rule) {
    case TripleRule::TwoAbsorbing: return s.contained;
    case TripleRule::WeaklyTwoAbsorbing: return s.contained && s.nonzero;
    case TripleRule::CompletelyWeakly: {
      const Elem v = r.mul(r.mul(x, y), z);
      return v != 0 && p.contains(v);
    }
    case TripleRule::TripleZero: return !s.nonzero;
    case TripleRule::ElementPrime:
    case TripleRule::ContainedNonzero: break;
  }
  return false;
}

std::optional<Triple> first_triple(const FiniteRing& r, const ElementSet& p,
                                   std::span<const Elem> middle, TripleRule rule,
                                   std::span<const Elem> xs, std::span<const Elem> ys,
                                   std::span<const Elem> zs) {
  Evaluator eval(r, p, {middle.begin(), middle.end()});
  for (Elem x : xs)
    for (Elem y : ys)
      for (Elem z : zs) {
        const TripleState s =
            rule == TripleRule::CompletelyWeakly ? TripleState{} : eval(x, y, z);
        if (matches(r, p, rule, s, x, y, z)) return Triple{x, y, z};
      }
  return std::nullopt;
}

std::vector<Triple> all_triples(const FiniteRing& r, const ElementSet& p,
                                std::span<const Elem> middle, TripleRule rule,
                                std::span<const Elem> xs, std::span<const Elem> ys,
                                std::span<const Elem> zs) {
  Evaluator eval(r, p, {middle.begin(), middle.end()});
  std::vector<Triple> out;
  for (Elem x : xs)
    for (Elem y : ys)
      for (Elem z : zs) {
        const TripleState s =
            rule == TripleRule::CompletelyWeakly ? TripleState{} : eval(x, y, z);
        if (matches(r, p, rule, s, x, y, z)) out.push_back({x, y, z});
      }
  return out;
}

}  // namespace grw::reference
