#include "grw/kernels.hpp"

#include "grw/error.hpp"
#include "grw/parallel.hpp"

namespace grw {
namespace {

bool pair_rule(TripleRule r) {
  return r != TripleRule::ElementPrime && r != TripleRule::ContainedNonzero;
}

// Prefix test on x (and y) so rows can be skipped early.
bool x_can_match(const FiniteRing&, const ElementSet& p, TripleRule rule, Elem x) {
  if (rule == TripleRule::ElementPrime) return !p.contains(x);
  return true;
}

bool xy_can_match(const FiniteRing& r, const ElementSet& p, TripleRule rule, Elem x, Elem y) {
  if (rule == TripleRule::ContainedNonzero) return true;
  if (rule == TripleRule::ElementPrime) return !p.contains(y);
  return !p.contains(r.mul(x, y));
}

bool tail_matches(const InterleaveTable& t, const ContainmentRows& good, const ElementSet& p,
                  TripleRule rule, std::size_t px, std::size_t py, std::size_t pz) {
  const auto& gr = t.graded();
  const auto& r = gr.ring();
  const auto& hs = gr.homogeneous_order();
  const Elem x = hs[px], y = hs[py], z = hs[pz];
  if (pair_rule(rule)) {
    if (p.contains(r.mul(y, z)) || p.contains(r.mul(x, z))) return false;
  } else if (rule == TripleRule::ElementPrime && p.contains(z)) {
    return false;
  }
  switch (rule) {
    case TripleRule::CompletelyWeakly: {
      const Elem xyz = r.mul(r.mul(x, y), z);
      return xyz != 0 && p.contains(xyz);
    }
    case TripleRule::TwoAbsorbing:
      return bits::subset(t.between(px, py), good.row(pz));
    case TripleRule::WeaklyTwoAbsorbing:
    case TripleRule::ElementPrime:
    case TripleRule::ContainedNonzero: {
      const auto s = evaluate(t, good, px, py, pz);
      return s.contained && s.nonzero;
    }
    case TripleRule::TripleZero:
      return !bits::intersects(t.between(px, py), t.reaching(pz));
  }
  return false;
}

}  // namespace

InterleaveTable::InterleaveTable(const GradedRing& gr, std::vector<Elem> middle)
    : gr_(&gr), middle_(std::move(middle)), n_(gr.homogeneous_order().size()) {
  if (n_ > kMaxHomogeneous)
    fail(ErrorKind::SizeLimit, "h(R) has " + std::to_string(n_) +
                                   " elements; the triple kernels accept at most " +
                                   std::to_string(kMaxHomogeneous));
  const auto& r = gr.ring();
  const auto& hs = gr.homogeneous_order();
  for (Elem m : middle_)
    if (!gr.is_homogeneous(m))
      fail(ErrorKind::Precondition, "interleaved middle element is not homogeneous");

  between_ = BitRows(n_ * n_, n_);
  reaching_ = BitRows(n_, n_);
#pragma omp parallel for schedule(static)
  for (long px = 0; px < static_cast<long>(n_); ++px) {
    for (std::size_t py = 0; py < n_; ++py) {
      auto row = between_.row(px * n_ + py);
      for (Elem m : middle_) {
        const Elem v = r.mul(r.mul(hs[px], m), hs[py]);
        bits::set(row, static_cast<std::size_t>(gr.position(v)));
      }
    }
  }
#pragma omp parallel for schedule(static)
  for (long pz = 0; pz < static_cast<long>(n_); ++pz) {
    auto row = reaching_.row(pz);
    for (std::size_t pv = 0; pv < n_; ++pv)
      for (Elem m : middle_)
        if (r.mul(r.mul(hs[pv], m), hs[pz]) != 0) {
          bits::set(row, pv);
          break;
        }
  }
}

ContainmentRows::ContainmentRows(const InterleaveTable& table, const ElementSet& p) {
  const auto& gr = table.graded();
  const auto& r = gr.ring();
  const auto& hs = gr.homogeneous_order();
  const std::size_t n = table.positions();
  rows_ = BitRows(n, n);
#pragma omp parallel for schedule(static)
  for (long pz = 0; pz < static_cast<long>(n); ++pz) {
    auto row = rows_.row(pz);
    for (std::size_t pv = 0; pv < n; ++pv) {
      bool all = true;
      for (Elem m : table.middle())
        if (!p.contains(r.mul(r.mul(hs[pv], m), hs[pz]))) {
          all = false;
          break;
        }
      if (all) bits::set(row, pv);
    }
  }
}

bool matches(const InterleaveTable& t, const ContainmentRows& good, const ElementSet& p,
             TripleRule rule, std::size_t px, std::size_t py, std::size_t pz) {
  const auto& gr = t.graded();
  const auto& hs = gr.homogeneous_order();
  return x_can_match(gr.ring(), p, rule, hs[px]) &&
         xy_can_match(gr.ring(), p, rule, hs[px], hs[py]) &&
         tail_matches(t, good, p, rule, px, py, pz);
}

std::optional<Triple> first_triple(const InterleaveTable& t, const ContainmentRows& good,
                                   const ElementSet& p, TripleRule rule,
                                   std::span<const std::size_t> xs,
                                   std::span<const std::size_t> ys,
                                   std::span<const std::size_t> zs) {
  const auto& gr = t.graded();
  const auto& r = gr.ring();
  const auto& hs = gr.homogeneous_order();
  auto hit = first_hit<Triple>(xs.size(), [&](std::size_t i) -> std::optional<Triple> {
    const std::size_t px = xs[i];
    if (!x_can_match(r, p, rule, hs[px])) return std::nullopt;
    for (std::size_t py : ys) {
      if (!xy_can_match(r, p, rule, hs[px], hs[py])) continue;
      for (std::size_t pz : zs)
        if (tail_matches(t, good, p, rule, px, py, pz)) return Triple{hs[px], hs[py], hs[pz]};
    }
    return std::nullopt;
  });
  if (!hit) return std::nullopt;
  return hit->second;
}

std::vector<Triple> all_triples(const InterleaveTable& t, const ContainmentRows& good,
                                const ElementSet& p, TripleRule rule,
                                std::span<const std::size_t> xs,
                                std::span<const std::size_t> ys,
                                std::span<const std::size_t> zs) {
  const auto& gr = t.graded();
  const auto& r = gr.ring();
  const auto& hs = gr.homogeneous_order();
  return collect_rows<Triple>(xs.size(), [&](std::size_t i, std::vector<Triple>& out) {
    const std::size_t px = xs[i];
    if (!x_can_match(r, p, rule, hs[px])) return;
    for (std::size_t py : ys) {
      if (!xy_can_match(r, p, rule, hs[px], hs[py])) continue;
      for (std::size_t pz : zs)
        if (tail_matches(t, good, p, rule, px, py, pz)) out.push_back({hs[px], hs[py], hs[pz]});
    }
  });
}

std::size_t count_triples(const InterleaveTable& t, const ContainmentRows& good,
                          const ElementSet& p, TripleRule rule,
                          std::span<const std::size_t> xs, std::span<const std::size_t> ys,
                          std::span<const std::size_t> zs) {
  const auto& gr = t.graded();
  const auto& r = gr.ring();
  const auto& hs = gr.homogeneous_order();
  std::size_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long i = 0; i < static_cast<long>(xs.size()); ++i) {
    const std::size_t px = xs[i];
    if (!x_can_match(r, p, rule, hs[px])) continue;
    for (std::size_t py : ys) {
      if (!xy_can_match(r, p, rule, hs[px], hs[py])) continue;
      for (std::size_t pz : zs) total += tail_matches(t, good, p, rule, px, py, pz);
    }
  }
  return total;
}

}  // namespace grw
