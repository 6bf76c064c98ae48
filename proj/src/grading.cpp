#include "grw/grading.hpp"

#include <sstream>

#include "grw/error.hpp"

namespace grw {
namespace {

void check_shape(const FiniteRing& r, const Grading& grading) {
  const auto& comps = grading.components();
  if (comps.size() != grading.group().order() || comps.empty())
    fail(ErrorKind::MalformedTable, "grading must give one component per group element");
  for (const auto& c : comps)
    if (c.universe() != r.order())
      fail(ErrorKind::MalformedTable, "grading component is over a different carrier");
}

// Builds the decomposition table by enumerating all component families.
// Returns a failure report when two families collide or the span misses R.
ValidationReport decomposition_table(const FiniteRing& r, const Grading& grading,
                                     std::vector<Elem>& table) {
  const std::size_t gn = grading.group().order();
  std::vector<std::vector<Elem>> members;
  for (const auto& c : grading.components()) members.push_back(c.elements());

  // partial sums with their families, extended one component at a time
  std::vector<Elem> sums{0};
  std::vector<Elem> families;  // sums.size() * processed
  std::size_t done = 0;
  for (std::size_t g = 0; g < gn; ++g) {
    std::vector<Elem> nsums;
    std::vector<Elem> nfam;
    nsums.reserve(sums.size() * members[g].size());
    for (std::size_t i = 0; i < sums.size(); ++i)
      for (Elem c : members[g]) {
        nsums.push_back(r.add(sums[i], c));
        for (std::size_t k = 0; k < done; ++k) nfam.push_back(families[i * done + k]);
        nfam.push_back(c);
      }
    sums = std::move(nsums);
    families = std::move(nfam);
    ++done;
  }
  table.assign(r.order() * gn, 0);
  std::vector<char> seen(r.order(), 0);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const Elem a = sums[i];
    if (seen[a]) {
      std::vector<Elem> w{a};
      return ValidationReport::failure("direct sum: decomposition not unique", w);
    }
    seen[a] = 1;
    for (std::size_t g = 0; g < gn; ++g) table[std::size_t{a} * gn + g] = families[i * gn + g];
  }
  for (Elem a = 0; a < r.order(); ++a)
    if (!seen[a]) return ValidationReport::failure("direct sum: components do not span", {a});
  return ValidationReport::success();
}

}  // namespace

std::vector<Elem> subgroup_generators(const FiniteRing& r, const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet reached = additive_span(r, gens);
  members.for_each([&](Elem a) {
    if (reached.contains(a)) return;
    gens.push_back(a);
    reached = additive_span(r, gens);
  });
  return gens;
}

ValidationReport validate_grading(const FiniteRing& r, const Grading& grading) {
  check_shape(r, grading);
  const auto& group = grading.group();
  const std::size_t gn = group.order();

  for (Elem g = 0; g < gn; ++g) {
    const auto& c = grading.component(g);
    if (!c.contains(0)) return ValidationReport::failure("component missing zero", {g});
    const auto m = c.elements();
    for (Elem a : m) {
      if (!c.contains(r.neg(a)))
        return ValidationReport::failure("component not closed under negation", {g, a});
      for (Elem b : m)
        if (!c.contains(r.add(a, b)))
          return ValidationReport::failure("component not closed under addition", {g, a, b});
    }
  }

  std::size_t product = 1;
  for (Elem g = 0; g < gn; ++g) {
    product *= grading.component(g).count();
    if (product > (std::size_t{1} << 40)) break;
  }
  if (product != r.order()) {
    std::ostringstream os;
    os << "direct sum: product of component sizes ";
    if (product > (std::size_t{1} << 40))
      os << "exceed " << r.order();
    else
      os << product << " != " << r.order();
    return ValidationReport::failure(os.str());
  }

  std::vector<Elem> table;
  if (auto rep = decomposition_table(r, grading, table); !rep.ok) return rep;

  for (Elem g = 0; g < gn; ++g) {
    const auto mg = grading.component(g).elements();
    for (Elem h = 0; h < gn; ++h) {
      const auto& target = grading.component(group.op(g, h));
      for (Elem a : mg) {
        bool ok = true;
        Elem bad = 0;
        grading.component(h).for_each([&](Elem b) {
          if (ok && !target.contains(r.mul(a, b))) {
            ok = false;
            bad = b;
          }
        });
        if (!ok) return ValidationReport::failure("multiplicativity R_g R_h in R_gh", {a, bad});
      }
    }
  }

  if (r.unity() && !grading.component(group.identity()).contains(*r.unity()))
    return ValidationReport::failure("unity outside the identity component", {*r.unity()});
  return ValidationReport::success();
}

GradedRing::GradedRing(RingPtr ring, Grading grading, std::string label)
    : ring_(std::move(ring)), grading_(std::move(grading)), label_(std::move(label)) {
  const auto rep = validate_grading(*ring_, grading_);
  if (!rep.ok) fail(ErrorKind::Validation, "grading failed: " + rep.violation);
  decomposition_table(*ring_, grading_, decomposition_);

  const std::size_t n = ring_->order(), gn = group().order();
  degree_.assign(n, -1);
  homogeneous_ = ElementSet(n);
  position_.assign(n, -1);
  scan_order_.push_back(0);
  homogeneous_.insert(0);
  for (Elem g = 0; g < gn; ++g) {
    component(g).for_each([&](Elem a) {
      homogeneous_.insert(a);
      if (a == 0) return;
      degree_[a] = g;
      scan_order_.push_back(a);
    });
    component_generators_.push_back(subgroup_generators(*ring_, component(g)));
  }
  for (std::size_t i = 0; i < scan_order_.size(); ++i)
    position_[scan_order_[i]] = static_cast<int>(i);
}

ElementSet homogeneous_elements(const GradedRing& gr) { return gr.homogeneous(); }

Grading make_trivial_grading(const FiniteRing& r, const FiniteGroup& g) {
  std::vector<ElementSet> comps(g.order(), ElementSet(r.order()));
  for (auto& c : comps) c.insert(0);
  comps[g.identity()] = ElementSet::full(r.order());
  return Grading(g, std::move(comps));
}

Grading make_gaussian_grading(const FiniteRing& r) {
  if (r.shape().kind != RingShape::Kind::Gaussian)
    fail(ErrorKind::Precondition, "gaussian grading needs a ring built as Z_n[i]");
  const std::size_t n = r.shape().param;
  ElementSet real(r.order()), imag(r.order());
  for (std::size_t v = 0; v < n; ++v) {
    real.insert(v * n);
    imag.insert(v);
  }
  return Grading(make_cyclic(2), {real, imag});
}

Grading make_checkerboard_grading(const FiniteRing& r) {
  if (r.shape().kind != RingShape::Kind::Matrix || r.shape().param != 2)
    fail(ErrorKind::Precondition, "checkerboard grading needs a 2x2 matrix ring");
  std::vector<ElementSet> comps(4, ElementSet(r.order()));
  comps[1].insert(0);
  comps[3].insert(0);
  for (Elem a = 0; a < r.order(); ++a) {
    const auto e = matrix_entries(r, a);
    if (e[1] == 0 && e[2] == 0) comps[0].insert(a);
    if (e[0] == 0 && e[3] == 0) comps[2].insert(a);
  }
  return Grading(make_cyclic(4), std::move(comps));
}

Grading make_product_grading(const GradedRing& gr, const GradedRing& gt) {
  if (!(gr.group() == gt.group()))
    fail(ErrorKind::Precondition, "product grading needs the same grading group");
  const std::size_t n = gt.order();
  std::vector<ElementSet> comps;
  for (Elem g = 0; g < gr.group().order(); ++g) {
    ElementSet c(gr.order() * n);
    gr.component(g).for_each([&](Elem a) {
      gt.component(g).for_each([&](Elem b) { c.insert(std::size_t{a} * n + b); });
    });
    comps.push_back(std::move(c));
  }
  return Grading(gr.group(), std::move(comps));
}

}  // namespace grw
