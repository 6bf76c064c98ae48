#include "grw/theorems.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "grw/classify.hpp"
#include "grw/error.hpp"
#include "grw/reference.hpp"

namespace grw {
namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// True when every product of one generator from each factor satisfies `ok`
// (left-nested). An empty factor makes the product set {0}.
template <class F>
bool all_products(const FiniteRing& r, const std::vector<const std::vector<Elem>*>& f, F&& ok) {
  std::function<bool(std::size_t, Elem)> rec = [&](std::size_t i, Elem acc) {
    if (i == f.size()) return ok(acc);
    for (Elem a : *f[i])
      if (!rec(i + 1, i == 0 ? a : r.mul(acc, a))) return false;
    return true;
  };
  return rec(0, 0);
}

bool products_zero(const FiniteRing& r, const std::vector<const std::vector<Elem>*>& f) {
  return all_products(r, f, [](Elem v) { return v == 0; });
}

bool products_within(const FiniteRing& r, const std::vector<const std::vector<Elem>*>& f,
                     const ElementSet& p) {
  return all_products(r, f, [&](Elem v) { return p.contains(v); });
}

std::uint64_t pack(Elem x, Elem y) { return (std::uint64_t{x} << 16) | y; }

enum class Pred { Prime, WeaklyPrime, TwoAbs, Weakly2Abs, StronglyWeakly };

const char* pred_name(Pred p) {
  switch (p) {
    case Pred::Prime: return "graded-prime";
    case Pred::WeaklyPrime: return "graded-weakly-prime";
    case Pred::TwoAbs: return "graded-2-absorbing";
    case Pred::Weakly2Abs: return "graded-weakly-2-absorbing";
    case Pred::StronglyWeakly: return "graded-strongly-weakly-2-absorbing";
  }
  return "";
}

// Per-ring caches keyed by two-sided lattice index.
class RingFacts {
 public:
  struct Degree {
    bool applicable = false;
    Verdict weakly, plain;
    std::vector<Triple> zeros;
    std::unordered_map<std::uint64_t, std::vector<Elem>> zeros_by_pair;
    std::vector<Elem> pg_gens;  // generators of P ∩ R_g
  };

  RingFacts(GradedRingPtr gr, std::string label, std::size_t cap)
      : ctx_(std::move(gr), cap), label_(std::move(label)) {}

  const std::string& label() const { return label_; }
  const RingContext& ctx() const { return ctx_; }
  const GradedRing& graded() const { return ctx_.graded(); }
  const FiniteRing& ring() const { return ctx_.ring(); }
  const IdealLattice& lattice() const { return ctx_.lattice(Sidedness::TwoSided); }
  const IdealLattice& lattice(Sidedness s) const { return ctx_.lattice(s); }
  const IdealSubset& ideal(std::size_t i) const { return lattice()[i]; }

  std::vector<std::size_t> proper() const {
    std::vector<std::size_t> out;
    const auto& lat = lattice();
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (i != lat.whole()) out.push_back(i);
    return out;
  }

  std::size_t index_of(const IdealSubset& s) const {
    auto i = lattice().find(s.members());
    if (!i) fail(ErrorKind::Validation, "ideal missing from the graded lattice of " + label_);
    return *i;
  }

  const Verdict& verdict(std::size_t i, Pred p) {
    const auto key = std::pair{i, static_cast<int>(p)};
    auto it = verdicts_.find(key);
    if (it != verdicts_.end()) return it->second;
    const auto& s = ideal(i);
    Verdict v;
    switch (p) {
      case Pred::Prime: v = is_graded_prime(ctx_, s); break;
      case Pred::WeaklyPrime: v = is_graded_weakly_prime(ctx_, s); break;
      case Pred::TwoAbs: v = is_graded_2_absorbing(ctx_, s); break;
      case Pred::Weakly2Abs: v = is_graded_weakly_2_absorbing(ctx_, s); break;
      case Pred::StronglyWeakly: v = is_graded_strongly_weakly_2_absorbing(ctx_, s); break;
    }
    return verdicts_.emplace(key, std::move(v)).first->second;
  }
  bool holds(std::size_t i, Pred p) { return verdict(i, p).holds(); }

  const Degree& degree(std::size_t i, Elem g) {
    const auto key = std::pair{i, g};
    auto it = degrees_.find(key);
    if (it != degrees_.end()) return it->second;
    Degree d;
    const auto& s = ideal(i);
    d.applicable = !graded().component(g).is_subset_of(s.members());
    if (d.applicable) {
      d.weakly = is_g_weakly_2_absorbing(ctx_, s, g, DegreeMode::Weakly);
      d.plain = is_g_weakly_2_absorbing(ctx_, s, g, DegreeMode::Plain);
      d.zeros = find_g_triple_zeros(ctx_, s, g).triples;
      for (const auto& t : d.zeros) d.zeros_by_pair[pack(t.x, t.y)].push_back(t.z);
      d.pg_gens = subgroup_generators(ring(), graded_component(graded(), s, g));
    }
    return degrees_.emplace(key, std::move(d)).first->second;
  }

  const std::vector<Elem>& identity_gens() const {
    return graded().component_generators(graded().group().identity());
  }

  IdealRef ref(const IdealSubset& s) const {
    IdealRef r;
    r.gens = homogeneous_generators(graded(), s);
    for (Elem a : r.gens) r.names.push_back(ring().name(a));
    return r;
  }

  Finding finding(std::vector<const IdealSubset*> ideals, std::vector<Elem> elems,
                  std::string detail) const {
    Finding f;
    f.ring = label_;
    for (const auto* s : ideals) f.ideals.push_back(ref(*s));
    for (Elem a : elems) f.element_names.push_back(ring().name(a));
    f.elements = std::move(elems);
    f.detail = std::move(detail);
    return f;
  }

 private:
  RingContext ctx_;
  std::string label_;
  std::map<std::pair<std::size_t, int>, Verdict> verdicts_;
  std::map<std::pair<std::size_t, Elem>, Degree> degrees_;
};

struct QuotientFacts {
  Quotient q;
  std::unique_ptr<RingFacts> facts;
};

const std::vector<std::string> kIds = {"P1",  "P2",  "P3",  "P4",  "P5",  "P6",  "P7",
                                       "P8",  "P9",  "P10", "P11", "P12", "P13", "P14",
                                       "P15", "P16", "P17", "P18", "P19"};

const std::map<std::string, std::string> kStatements = {
    {"P1", "P graded weakly prime, I, J graded left (or right) ideals, 0 != IJ ⊆ P: I ⊆ P or J ⊆ P"},
    {"P2", "P graded weakly prime, x, y, z in h(R), 0 != xRyRz ⊆ P: x, y or z in P"},
    {"P3", "graded weakly prime implies graded weakly 2-absorbing"},
    {"P4", "P ≠ K graded weakly prime: P ∩ K graded weakly 2-absorbing"},
    {"P5", "R unital, 0 != ABC ⊆ P over graded left ideals forces AC, BC or AB into P: "
           "P graded weakly 2-absorbing"},
    {"P6", "P graded weakly 2-absorbing, K ⊆ P graded: P/K graded weakly 2-absorbing in R/K"},
    {"P7", "K ⊆ P proper graded, K and P/K graded weakly 2-absorbing: P graded weakly 2-absorbing"},
    {"P8", "kernel of a graded homomorphism is a graded ideal"},
    {"P9", "f surjective graded: f(P) weakly 2-absorbing when P is and Ker f ⊆ P; "
           "f^-1(I) weakly 2-absorbing when I and Ker f are"},
    {"P10", "P g-weakly 2-absorbing, x, y in R_g, K graded left ideal, xR_e yK_g ⊆ P, no "
            "g-triple-zero (x,y,z) with z in K_g, xy not in P: xK_g ⊆ P or yK_g ⊆ P"},
    {"P11", "P g-weakly 2-absorbing and free g-triple-zero for ABK, 0 != A_gB_gK_g ⊆ P: "
            "A_gK_g, B_gK_g or A_gB_g inside P (pointwise form checked too)"},
    {"P12", "g-triple-zero (x,y,z): xR_e yP_g = P_g yR_e z = xP_g z = P_g^2 z = xP_g^2 = "
            "P_g yP_g = 0"},
    {"P13", "P g-weakly but not g-2-absorbing: P_g^3 = 0; P_g^3 != 0: g-weakly iff g-2-absorbing"},
    {"P14", "R unital: P ⋉ M graded 2-absorbing iff P graded 2-absorbing"},
    {"P15", "R unital: P ⋉ M graded weakly 2-absorbing implies P graded weakly 2-absorbing"},
    {"P16", "R unital, P_g != R_g: P ⋉ M g-weakly 2-absorbing iff P g-weakly 2-absorbing and "
            "xR_e yR_e M_g = M_g R_e yR_e z = xM_g z = 0 for every g-triple-zero"},
    {"P17", "graded strongly weakly 2-absorbing iff the triple condition holds for A ⊇ P"},
    {"P18", "every proper graded ideal strongly weakly 2-absorbing iff IJ, IK or JK equals IJK "
            "or IJK = 0 for all graded I, J, K"},
    {"P19", "every proper graded ideal strongly weakly 2-absorbing: I^3 = I^2 or I^3 = 0"},
};

std::string cap_reason(const Error& e) { return std::string("cap exceeded: ") + e.what(); }

// Shared state for one corpus run. Rings are processed one at a time; the
// kernels underneath parallelize, so every count and witness is independent
// of the worker count.
class Runner {
 public:
  Runner(const Corpus& corpus, const TheoremOptions& opts) : corpus_(corpus), opts_(opts) {
    for (const auto& e : corpus)
      facts_.push_back(std::make_unique<RingFacts>(e.ring, e.label, opts.ideal_cap));
  }

  PropertyResult run(const std::string& id) {
    PropertyResult res;
    res.id = id;
    res.statement = property_statement(id);
    using Fn = void (Runner::*)(std::size_t, PropertyResult&);
    static const std::map<std::string, Fn> table = {
        {"P1", &Runner::p1},   {"P2", &Runner::p2},   {"P3", &Runner::p3},
        {"P4", &Runner::p4},   {"P5", &Runner::p5},   {"P6", &Runner::p6},
        {"P7", &Runner::p7},   {"P8", &Runner::p8},   {"P9", &Runner::p9},
        {"P10", &Runner::p10}, {"P11", &Runner::p11}, {"P12", &Runner::p12},
        {"P13", &Runner::p13}, {"P14", &Runner::p14}, {"P15", &Runner::p15},
        {"P16", &Runner::p16}, {"P17", &Runner::p17}, {"P18", &Runner::p18},
        {"P19", &Runner::p19}};
    const Fn fn = table.at(id);
    for (std::size_t r = 0; r < corpus_.size(); ++r) {
      try {
        (this->*fn)(r, res);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeLimit) throw;
        res.skipped.push_back({corpus_[r].label, cap_reason(e)});
      }
    }
    return res;
  }

  Question1Certificate question1();
  Census census();

 private:
  RingFacts& facts(std::size_t r) { return *facts_[r]; }

  QuotientFacts& quotient(std::size_t r, std::size_t k) {
    const auto key = std::pair{r, k};
    auto it = quotients_.find(key);
    if (it != quotients_.end()) return it->second;
    auto& f = facts(r);
    const auto& kk = f.ideal(k);
    const std::string label =
        "quotient(" + f.label() + ", gens [" + join(f.ref(kk).names, ",") + "])";
    QuotientFacts q{make_quotient(f.ctx().graded_ptr(), kk, label), nullptr};
    q.facts = std::make_unique<RingFacts>(q.q.ring, label, opts_.ideal_cap);
    return quotients_.emplace(key, std::move(q)).first->second;
  }

  RingFacts& side_facts(const GradedRingPtr& gr) {
    auto it = side_.find(gr.get());
    if (it != side_.end()) return *it->second;
    auto f = std::make_unique<RingFacts>(gr, gr->label(), opts_.ideal_cap);
    return *side_.emplace(gr.get(), std::move(f)).first->second;
  }

  // Lattice indices of the weakly prime proper ideals.
  std::vector<std::size_t> weakly_primes(RingFacts& f) {
    std::vector<std::size_t> out;
    for (std::size_t i : f.proper())
      if (f.holds(i, Pred::WeaklyPrime)) out.push_back(i);
    return out;
  }

  Finding conclusion_failure(RingFacts& f, std::size_t i, Pred p, std::string detail,
                             std::vector<const IdealSubset*> extra = {}) {
    const Verdict& v = f.verdict(i, p);
    std::vector<const IdealSubset*> ideals = {&f.ideal(i)};
    for (const auto* s : extra) ideals.push_back(s);
    for (const auto& s : v.ideals) ideals.push_back(&s);
    Finding out = f.finding(ideals, v.elements, std::move(detail));
    out.verified = verify_witness(f.ctx(), f.ideal(i), pred_name(p), v);
    return out;
  }

  void p1(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto wp = weakly_primes(f);
    if (wp.empty()) return;
    for (Sidedness side : {Sidedness::Left, Sidedness::Right}) {
      const auto& lat = f.lattice(side);
      for (std::size_t p : wp) {
        const auto& pm = f.ideal(p).members();
        for (std::size_t i = 0; i < lat.size(); ++i)
          for (std::size_t j = 0; j < lat.size(); ++j) {
            const std::size_t ij = lat.product(i, j);
            if (ij == lat.zero() || !lat.subset_of(ij, pm)) continue;
            ++res.instances;
            if (lat.subset_of(i, pm) || lat.subset_of(j, pm)) continue;
            auto fd = f.finding({&f.ideal(p), &lat[i], &lat[j]}, {},
                                std::string("0 != IJ ⊆ P with I, J ") + to_string(side) +
                                    " ideals outside P");
            const auto raw = ideal_product(f.graded(), lat[i], lat[j]);
            fd.verified = !raw.is_zero() && raw.members().is_subset_of(pm);
            res.violations.push_back(std::move(fd));
          }
      }
    }
  }

  void p2(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& ctx = f.ctx();
    for (std::size_t p : weakly_primes(f)) {
      const auto& pm = f.ideal(p).members();
      const auto& t = ctx.homogeneous_table();
      const auto& good = ctx.good_rows(pm, false);
      const auto& all = ctx.all_positions();
      res.instances += count_triples(t, good, pm, TripleRule::ContainedNonzero, all, all, all);
      if (auto hit = first_triple(t, good, pm, TripleRule::ElementPrime, all, all, all)) {
        auto fd = f.finding({&f.ideal(p)}, {hit->x, hit->y, hit->z},
                            "0 != xRyRz ⊆ P with x, y, z outside P");
        const auto s = reference::evaluate(f.ring(), pm, reference::carrier(f.ring()), hit->x,
                                           hit->y, hit->z);
        fd.verified = s.contained && s.nonzero && !pm.contains(hit->x) &&
                      !pm.contains(hit->y) && !pm.contains(hit->z);
        res.violations.push_back(std::move(fd));
      }
    }
  }

  void p3(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    for (std::size_t p : weakly_primes(f)) {
      ++res.instances;
      if (!f.holds(p, Pred::Weakly2Abs))
        res.violations.push_back(
            conclusion_failure(f, p, Pred::Weakly2Abs, "weakly prime but not weakly 2-absorbing"));
    }
  }

  void p4(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto wp = weakly_primes(f);
    for (std::size_t a = 0; a < wp.size(); ++a)
      for (std::size_t b = a + 1; b < wp.size(); ++b) {
        const auto meet = f.ideal(wp[a]).members() & f.ideal(wp[b]).members();
        const auto m = f.lattice().find(meet);
        if (!m) fail(ErrorKind::Validation, "intersection of graded ideals left the lattice");
        ++res.instances;
        if (!f.holds(*m, Pred::Weakly2Abs))
          res.violations.push_back(conclusion_failure(
              f, *m, Pred::Weakly2Abs, "intersection of weakly primes not weakly 2-absorbing",
              {&f.ideal(wp[a]), &f.ideal(wp[b])}));
      }
  }

  void p5(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    if (!f.ring().has_unity()) {
      res.skipped.push_back({f.label(), "requires unity"});
      return;
    }
    const auto& lat = f.lattice(Sidedness::Left);
    const std::size_t n = lat.size();
    for (std::size_t p : f.proper()) {
      const auto& pm = f.ideal(p).members();
      bool condition = true;
      for (std::size_t a = 0; a < n && condition; ++a)
        for (std::size_t b = 0; b < n && condition; ++b) {
          const std::size_t ab = lat.product(a, b);
          for (std::size_t c = 0; c < n && condition; ++c) {
            const std::size_t abc = lat.product(ab, c);
            if (abc == lat.zero() || !lat.subset_of(abc, pm)) continue;
            condition = lat.subset_of(lat.product(a, c), pm) ||
                        lat.subset_of(lat.product(b, c), pm) || lat.subset_of(ab, pm);
          }
        }
      if (!condition) continue;
      ++res.instances;
      if (!f.holds(p, Pred::Weakly2Abs))
        res.violations.push_back(conclusion_failure(
            f, p, Pred::Weakly2Abs, "left-ideal triple condition holds, not weakly 2-absorbing"));
    }
  }

  // Nonzero K ⊆ P, both in the lattice.
  template <class F>
  void for_kernels_below(RingFacts& f, std::size_t p, F&& fn) {
    const auto& lat = f.lattice();
    for (std::size_t k = 0; k < lat.size(); ++k)
      if (k != lat.zero() && lat.subset(k, p)) fn(k);
  }

  void p6(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    for (std::size_t p : f.proper()) {
      if (!f.holds(p, Pred::Weakly2Abs)) continue;
      for_kernels_below(f, p, [&](std::size_t k) {
        auto& q = quotient(r, k);
        const auto img = hom_image(q.q.projection, f.ideal(p));
        const std::size_t qi = q.facts->index_of(img);
        ++res.instances;
        if (!q.facts->holds(qi, Pred::Weakly2Abs)) {
          auto fd = conclusion_failure(*q.facts, qi, Pred::Weakly2Abs,
                                       "P/K not weakly 2-absorbing in " + q.facts->label());
          fd.ring = f.label();
          res.violations.push_back(std::move(fd));
        }
      });
    }
  }

  void p7(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    for (std::size_t p : f.proper()) {
      for_kernels_below(f, p, [&](std::size_t k) {
        if (!f.holds(k, Pred::Weakly2Abs)) return;
        auto& q = quotient(r, k);
        const std::size_t qi = q.facts->index_of(hom_image(q.q.projection, f.ideal(p)));
        if (!q.facts->holds(qi, Pred::Weakly2Abs)) return;
        ++res.instances;
        if (!f.holds(p, Pred::Weakly2Abs))
          res.violations.push_back(conclusion_failure(
              f, p, Pred::Weakly2Abs, "K and P/K weakly 2-absorbing, P not", {&f.ideal(k)}));
      });
    }
  }

  // Quotient projections by nonzero proper K, then product projections.
  template <class F>
  void for_homs(std::size_t r, F&& fn) {
    auto& f = facts(r);
    const auto& lat = f.lattice();
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (k == lat.zero() || k == lat.whole()) continue;
      auto& q = quotient(r, k);
      fn(q.q.projection, *q.facts);
    }
    if (const auto& fac = corpus_[r].factors) {
      for (int which : {0, 1}) {
        const auto& target = which == 0 ? fac->first : fac->second;
        fn(product_projection(corpus_[r].ring, fac->first, fac->second, which),
           side_facts(target));
      }
    }
  }

  void p8(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    for_homs(r, [&](const GradedRingHom& h, RingFacts&) {
      ++res.instances;
      const auto ker = hom_kernel(h);
      const bool ok = validate_graded_hom(h).ok && is_closed(f.ring(), ker.members(),
                                                             Sidedness::TwoSided) &&
                      is_graded_ideal(f.graded(), ker.members()).graded;
      if (!ok) {
        auto fd = f.finding({}, {}, "kernel onto " + h.target().label() + " is not graded");
        fd.verified = true;
        res.violations.push_back(std::move(fd));
      }
    });
  }

  void p9(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    for_homs(r, [&](const GradedRingHom& h, RingFacts& t) {
      const auto ker = hom_kernel(h);
      const std::size_t ki = f.index_of(ker);
      // (1) images.
      for (std::size_t p : f.proper()) {
        if (!f.lattice().subset(ki, p) || !f.holds(p, Pred::Weakly2Abs)) continue;
        const std::size_t ti = t.index_of(hom_image(h, f.ideal(p)));
        ++res.instances;
        if (!t.holds(ti, Pred::Weakly2Abs)) {
          auto fd = conclusion_failure(t, ti, Pred::Weakly2Abs,
                                       "f(P) not weakly 2-absorbing in " + t.label());
          fd.ring = f.label();
          res.violations.push_back(std::move(fd));
        }
      }
      // (2) preimages.
      if (ki == f.lattice().whole() || !f.holds(ki, Pred::Weakly2Abs)) return;
      for (std::size_t i : t.proper()) {
        if (!t.holds(i, Pred::Weakly2Abs)) continue;
        const std::size_t pi = f.index_of(hom_preimage(h, t.ideal(i)));
        ++res.instances;
        if (!f.holds(pi, Pred::Weakly2Abs))
          res.violations.push_back(conclusion_failure(
              f, pi, Pred::Weakly2Abs, "f^-1(I) not weakly 2-absorbing for I in " + t.label()));
      }
    });
  }

  // (P, g) pairs with P_g ≠ R_g and P g-weakly 2-absorbing.
  template <class F>
  void for_g_weakly(RingFacts& f, F&& fn) {
    for (std::size_t p : f.proper())
      for (Elem g = 0; g < f.graded().group().order(); ++g) {
        const auto& d = f.degree(p, g);
        if (d.applicable && d.weakly.holds()) fn(p, g, d);
      }
  }

  void p10(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& ring = f.ring();
    const auto& left = f.lattice(Sidedness::Left);
    const auto& egens = f.identity_gens();
    for_g_weakly(f, [&](std::size_t p, Elem g, const RingFacts::Degree& d) {
      const auto& pm = f.ideal(p).members();
      const auto rg = f.graded().component(g).elements();
      for (std::size_t k = 0; k < left.size(); ++k) {
        const ElementSet kg = graded_component(f.graded(), left[k], g);
        if (kg.count() == 1) continue;
        const auto kgens = subgroup_generators(ring, kg);
        for (Elem x : rg)
          for (Elem y : rg) {
            if (pm.contains(ring.mul(x, y))) continue;
            const std::vector<Elem> xs{x}, ys{y};
            if (!products_within(ring, {&xs, &egens, &ys, &kgens}, pm)) continue;
            bool zero_free = true;
            if (auto it = d.zeros_by_pair.find(pack(x, y)); it != d.zeros_by_pair.end())
              for (Elem z : it->second)
                if (kg.contains(z)) zero_free = false;
            if (!zero_free) continue;
            ++res.instances;
            if (products_within(ring, {&xs, &kgens}, pm) ||
                products_within(ring, {&ys, &kgens}, pm))
              continue;
            auto fd = f.finding({&f.ideal(p), &left[k]}, {x, y},
                                "xK_g and yK_g both leave P");
            fd.degree = g;
            fd.verified = true;
            res.violations.push_back(std::move(fd));
          }
      }
    });
  }

  void p11(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& ring = f.ring();
    const auto& lat = f.lattice();
    const std::size_t n = lat.size();
    for_g_weakly(f, [&](std::size_t p, Elem g, const RingFacts::Degree& d) {
      const auto& pm = f.ideal(p).members();
      std::vector<ElementSet> comp;
      std::vector<std::vector<Elem>> gens;
      for (std::size_t i = 0; i < n; ++i) {
        comp.push_back(graded_component(f.graded(), lat[i], g));
        gens.push_back(subgroup_generators(ring, comp.back()));
      }
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t k = 0; k < n; ++k) {
            if (!products_within(ring, {&gens[a], &gens[b], &gens[k]}, pm)) continue;
            bool free = true;
            for (const auto& t : d.zeros)
              if (comp[a].contains(t.x) && comp[b].contains(t.y) && comp[k].contains(t.z)) {
                free = false;
                break;
              }
            if (!free) continue;
            // Pointwise: every x in A_g, y in B_g, z in K_g has xy, xz or yz in P.
            std::optional<std::vector<Elem>> bad;
            comp[a].for_each([&](Elem x) {
              if (bad) return;
              comp[b].for_each([&](Elem y) {
                if (bad || pm.contains(ring.mul(x, y))) return;
                comp[k].for_each([&](Elem z) {
                  if (!bad && !pm.contains(ring.mul(x, z)) && !pm.contains(ring.mul(y, z)))
                    bad = std::vector<Elem>{x, y, z};
                });
              });
            });
            std::vector<const IdealSubset*> ids = {&f.ideal(p), &lat[a], &lat[b], &lat[k]};
            if (bad) {
              auto fd = f.finding(ids, *bad, "free triple with xy, xz, yz outside P");
              fd.degree = g;
              fd.verified = true;
              res.violations.push_back(std::move(fd));
            }
            if (products_zero(ring, {&gens[a], &gens[b], &gens[k]})) continue;
            ++res.instances;
            if (products_within(ring, {&gens[a], &gens[k]}, pm) ||
                products_within(ring, {&gens[b], &gens[k]}, pm) ||
                products_within(ring, {&gens[a], &gens[b]}, pm))
              continue;
            auto fd = f.finding(ids, {}, "A_gK_g, B_gK_g and A_gB_g all leave P");
            fd.degree = g;
            fd.verified = true;
            res.violations.push_back(std::move(fd));
          }
    });
  }

  void p12(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& ring = f.ring();
    const auto& eg = f.identity_gens();
    for_g_weakly(f, [&](std::size_t p, Elem g, const RingFacts::Degree& d) {
      const auto& pg = d.pg_gens;
      for (const auto& t : d.zeros) {
        ++res.instances;
        const std::vector<Elem> x{t.x}, y{t.y}, z{t.z};
        const std::vector<std::pair<const char*, std::vector<const std::vector<Elem>*>>> laws = {
            {"xR_e yP_g", {&x, &eg, &y, &pg}}, {"P_g yR_e z", {&pg, &y, &eg, &z}},
            {"xP_g z", {&x, &pg, &z}},          {"P_g^2 z", {&pg, &pg, &z}},
            {"xP_g^2", {&x, &pg, &pg}},         {"P_g yP_g", {&pg, &y, &pg}}};
        for (const auto& [name, factors] : laws) {
          if (products_zero(ring, factors)) continue;
          auto fd = f.finding({&f.ideal(p)}, {t.x, t.y, t.z}, std::string(name) + " != 0");
          fd.degree = g;
          fd.verified = !reference::evaluate(ring, f.ideal(p).members(),
                                             f.graded().component(f.graded().group().identity()).elements(),
                                             t.x, t.y, t.z)
                             .nonzero;
          res.violations.push_back(std::move(fd));
        }
      }
    });
  }

  void p13(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& ring = f.ring();
    for (std::size_t p : f.proper())
      for (Elem g = 0; g < f.graded().group().order(); ++g) {
        const auto& d = f.degree(p, g);
        if (!d.applicable) continue;
        const auto& pg = d.pg_gens;
        const bool cube_zero = products_zero(ring, {&pg, &pg, &pg});
        const bool gap = d.weakly.holds() && !d.plain.holds();
        if (gap) ++res.instances;
        // g-2-absorbing implies g-weakly, so the two claims fail together.
        if (gap && !cube_zero) {
          auto fd = f.finding({&f.ideal(p)}, d.plain.elements,
                              "g-weakly but not g-2-absorbing with P_g^3 != 0");
          fd.degree = g;
          fd.verified = true;
          res.violations.push_back(std::move(fd));
        }
      }
  }

  // Idealization entries: (base facts, X facts, entry).
  template <class F>
  bool for_idealization(std::size_t r, PropertyResult& res, F&& fn) {
    const auto& e = corpus_[r];
    if (!e.ring->ring().has_unity()) {
      res.skipped.push_back({e.label, "requires unity"});
      return false;
    }
    if (!e.idealization) return false;
    auto& base = side_facts(e.idealization->base);
    if (!base.ring().has_unity()) {
      res.skipped.push_back({e.label, "requires unity"});
      return false;
    }
    fn(base, facts(r), *e.idealization);
    return true;
  }

  void p14(std::size_t r, PropertyResult& res) {
    for_idealization(r, res, [&](RingFacts& base, RingFacts& x, const Idealization& id) {
      for (std::size_t p : base.proper()) {
        const std::size_t xi = x.index_of(embed_ideal_in_idealization(id, base.ideal(p)));
        ++res.instances;
        const bool lhs = x.holds(xi, Pred::TwoAbs);
        const bool rhs = base.holds(p, Pred::TwoAbs);
        if (lhs == rhs) continue;
        auto fd = lhs ? conclusion_failure(base, p, Pred::TwoAbs, "P ⋉ M 2-absorbing, P not")
                      : conclusion_failure(x, xi, Pred::TwoAbs, "P 2-absorbing, P ⋉ M not");
        fd.ring = x.label();
        res.violations.push_back(std::move(fd));
      }
    });
  }

  void p15(std::size_t r, PropertyResult& res) {
    for_idealization(r, res, [&](RingFacts& base, RingFacts& x, const Idealization& id) {
      for (std::size_t p : base.proper()) {
        const std::size_t xi = x.index_of(embed_ideal_in_idealization(id, base.ideal(p)));
        if (!x.holds(xi, Pred::Weakly2Abs)) continue;
        ++res.instances;
        if (!base.holds(p, Pred::Weakly2Abs)) {
          auto fd = conclusion_failure(base, p, Pred::Weakly2Abs,
                                       "P ⋉ M weakly 2-absorbing, P not");
          fd.ring = x.label();
          res.violations.push_back(std::move(fd));
        }
      }
    });
  }

  void p16(std::size_t r, PropertyResult& res) {
    for_idealization(r, res, [&](RingFacts& base, RingFacts& x, const Idealization& id) {
      const auto& xr = x.ring();
      const auto& grp = base.graded().group();
      // R_e embedded in X.
      std::vector<Elem> eg;
      for (Elem a : base.identity_gens()) eg.push_back(id.embed_ring(a));
      for (std::size_t p : base.proper())
        for (Elem g = 0; g < grp.order(); ++g) {
          const auto& d = base.degree(p, g);
          if (!d.applicable) continue;
          const std::size_t xi = x.index_of(embed_ideal_in_idealization(id, base.ideal(p)));
          const auto& dx = x.degree(xi, g);
          ++res.instances;
          ElementSet mg(xr.order());
          id.module.components[g].for_each([&](Elem m) { mg.insert(id.embed_module(m)); });
          const auto mgens = subgroup_generators(xr, mg);
          bool annihilated = true;
          std::optional<Triple> culprit;
          for (const auto& t : d.zeros) {
            const std::vector<Elem> xs{id.embed_ring(t.x)}, ys{id.embed_ring(t.y)},
                zs{id.embed_ring(t.z)};
            if (!products_zero(xr, {&xs, &eg, &ys, &eg, &mgens}) ||
                !products_zero(xr, {&mgens, &eg, &ys, &eg, &zs}) ||
                !products_zero(xr, {&xs, &mgens, &zs})) {
              annihilated = false;
              culprit = t;
              break;
            }
          }
          const bool lhs = dx.weakly.holds();
          const bool rhs = d.weakly.holds() && annihilated;
          if (lhs == rhs) continue;
          Finding fd;
          if (lhs) {
            const std::vector<Elem> el =
                culprit ? std::vector<Elem>{culprit->x, culprit->y, culprit->z}
                        : d.weakly.elements;
            fd = base.finding({&base.ideal(p)}, el,
                              culprit ? "P ⋉ M g-weakly 2-absorbing but a g-triple-zero of P "
                                        "does not annihilate M_g"
                                      : "P ⋉ M g-weakly 2-absorbing, P not");
          } else {
            fd = x.finding({&x.ideal(xi)}, dx.weakly.elements,
                           "P g-weakly 2-absorbing with annihilating g-triple-zeros, P ⋉ M not");
          }
          fd.ring = x.label();
          fd.degree = g;
          fd.verified = lhs ? true
                            : verify_witness(x.ctx(), x.ideal(xi), "g-weakly-2-absorbing",
                                             dx.weakly);
          res.violations.push_back(std::move(fd));
        }
    });
  }

  void p17(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& lat = f.lattice();
    const std::size_t n = lat.size();
    for (std::size_t p : f.proper()) {
      const auto& pm = f.ideal(p).members();
      bool restricted = true;
      for (std::size_t a = 0; a < n && restricted; ++a) {
        if (!lat.subset(p, a)) continue;
        for (std::size_t b = 0; b < n && restricted; ++b) {
          const std::size_t ab = lat.product(a, b);
          for (std::size_t c = 0; c < n && restricted; ++c) {
            const std::size_t abc = lat.product(ab, c);
            if (abc == lat.zero() || !lat.subset_of(abc, pm)) continue;
            restricted = lat.subset_of(ab, pm) || lat.subset_of(lat.product(a, c), pm) ||
                         lat.subset_of(lat.product(b, c), pm);
          }
        }
      }
      ++res.instances;
      if (restricted == f.holds(p, Pred::StronglyWeakly)) continue;
      auto fd = restricted ? conclusion_failure(f, p, Pred::StronglyWeakly,
                                                "restricted triple condition holds, full fails")
                           : f.finding({&f.ideal(p)}, {}, "full condition holds, restricted fails");
      res.violations.push_back(std::move(fd));
    }
  }

  bool all_strongly_weakly(RingFacts& f) {
    for (std::size_t p : f.proper())
      if (!f.holds(p, Pred::StronglyWeakly)) return false;
    return true;
  }

  void p18(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    const auto& lat = f.lattice();
    const std::size_t n = lat.size();
    std::optional<std::array<std::size_t, 3>> broken;
    for (std::size_t i = 0; i < n && !broken; ++i)
      for (std::size_t j = 0; j < n && !broken; ++j)
        for (std::size_t k = 0; k < n && !broken; ++k) {
          const std::size_t ij = lat.product(i, j);
          const std::size_t ijk = lat.product(ij, k);
          if (ijk == lat.zero() || ij == ijk || lat.product(i, k) == ijk ||
              lat.product(j, k) == ijk)
            continue;
          broken = std::array<std::size_t, 3>{i, j, k};
        }
    const bool every = all_strongly_weakly(f);
    if (!every && broken) return;
    ++res.instances;
    if (every == !broken) return;
    Finding fd = broken ? f.finding({&lat[(*broken)[0]], &lat[(*broken)[1]], &lat[(*broken)[2]]},
                                    {}, "every ideal strongly weakly, product condition fails")
                        : f.finding({}, {}, "product condition holds, some ideal not strongly weakly");
    res.violations.push_back(std::move(fd));
  }

  void p19(std::size_t r, PropertyResult& res) {
    auto& f = facts(r);
    if (!all_strongly_weakly(f)) return;
    const auto& lat = f.lattice();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      ++res.instances;
      const std::size_t sq = lat.product(i, i);
      const std::size_t cube = lat.product(sq, i);
      if (cube == sq || cube == lat.zero()) continue;
      auto fd = f.finding({&lat[i]}, {}, "I^3 differs from I^2 and from 0");
      const auto raw2 = ideal_product(f.graded(), lat[i], lat[i]);
      const auto raw3 = ideal_product(f.graded(), raw2, lat[i]);
      fd.verified = !(raw3 == raw2) && !raw3.is_zero();
      res.violations.push_back(std::move(fd));
    }
  }

  const Corpus& corpus_;
  TheoremOptions opts_;
  std::vector<std::unique_ptr<RingFacts>> facts_;
  std::map<std::pair<std::size_t, std::size_t>, QuotientFacts> quotients_;
  std::map<const GradedRing*, std::unique_ptr<RingFacts>> side_;
};

Question1Certificate Runner::question1() {
  Question1Certificate cert;
  for (std::size_t r = 0; r < corpus_.size(); ++r) {
    auto& f = facts(r);
    try {
      const auto& lat = f.lattice();
      const std::size_t n = lat.size();
      ++cert.rings;
      for (std::size_t p : f.proper()) {
        if (!f.holds(p, Pred::Weakly2Abs) || f.holds(p, Pred::TwoAbs)) continue;
        ++cert.qualifying_ideals;
        const auto& pm = f.ideal(p).members();
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = lat.product(a, b);
            for (std::size_t k = 0; k < n; ++k) {
              ++cert.examined;
              const std::size_t abk = lat.product(ab, k);
              if (abk == lat.zero() || !lat.subset_of(abk, pm)) continue;
              ++cert.hypothesis_hits;
              if (lat.subset_of(ab, pm) || lat.subset_of(lat.product(a, k), pm) ||
                  lat.subset_of(lat.product(b, k), pm))
                continue;
              auto fd = f.finding({&f.ideal(p), &lat[a], &lat[b], &lat[k]}, {},
                                  "0 != ABK ⊆ P with AB, AK, BK outside P");
              const auto& gr = f.graded();
              const auto rab = ideal_product(gr, lat[a], lat[b]);
              const auto rabk = ideal_product(gr, rab, lat[k]);
              fd.verified = !rabk.is_zero() && rabk.members().is_subset_of(pm) &&
                            !rab.members().is_subset_of(pm) &&
                            !ideal_product(gr, lat[a], lat[k]).members().is_subset_of(pm) &&
                            !ideal_product(gr, lat[b], lat[k]).members().is_subset_of(pm);
              cert.counterexamples.push_back(std::move(fd));
            }
          }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeLimit) throw;
      cert.skipped.push_back({f.label(), cap_reason(e)});
    }
  }
  return cert;
}

Census Runner::census() {
  Census out;
  for (std::size_t r = 0; r < corpus_.size(); ++r) {
    auto& f = facts(r);
    try {
      CensusRow row;
      row.ring = f.label();
      row.order = f.ring().order();
      row.commutative = f.ring().is_commutative();
      row.unital = f.ring().has_unity();
      row.graded_ideals = f.lattice().size();
      for (std::size_t p : f.proper()) {
        row.prime += f.holds(p, Pred::Prime);
        row.weakly_prime += f.holds(p, Pred::WeaklyPrime);
        const bool two = f.holds(p, Pred::TwoAbs), weak = f.holds(p, Pred::Weakly2Abs);
        row.two_absorbing += two;
        row.weakly_two_absorbing += weak;
        row.weakly_not_two_absorbing += weak && !two;
        row.strongly_weakly += f.holds(p, Pred::StronglyWeakly);
        for (Elem g = 0; g < f.graded().group().order(); ++g) {
          const auto& d = f.degree(p, g);
          if (d.applicable && d.weakly.holds()) row.triple_zeros += d.zeros.size();
        }
      }
      row.all_strongly_weakly = all_strongly_weakly(f);
      out.rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeLimit) throw;
      out.skipped.push_back({f.label(), cap_reason(e)});
    }
  }
  return out;
}

CorpusEntry base_entry(const std::string& expr) {
  auto e = parse_ring_expr(expr);
  return corpus_entry(RingSpecDocument{e, {}, e->ring, {}, {}});
}

}  // namespace

CorpusEntry corpus_entry(const RingSpecDocument& doc) {
  CorpusEntry out;
  out.ring = doc.ring;
  out.label = doc.ring->label();
  const bool natural = doc.grading.empty() || doc.grading == "inherited" ||
                       doc.grading == "product";
  if (natural && doc.expr->idealization) out.idealization = doc.expr->idealization;
  if (natural && doc.expr->kind == RingExpr::Kind::Product)
    out.factors = std::pair{doc.expr->children[0]->ring, doc.expr->children[1]->ring};
  return out;
}

Corpus default_corpus() {
  Corpus out;
  std::vector<std::string> bases;
  for (int n : {2, 3, 4, 6, 8, 9, 16}) bases.push_back("zn(" + std::to_string(n) + ")");
  for (int n : {2, 3, 4, 8}) bases.push_back("gaussian(" + std::to_string(n) + ")");
  for (int n : {2, 4, 8}) bases.push_back("matrix(zn(" + std::to_string(n) + "),2)");
  bases.push_back("product(gaussian(2),gaussian(4))");
  for (const auto& b : bases) out.push_back(base_entry(b));

  const std::size_t n_bases = out.size();
  for (std::size_t i = 0; i < n_bases; ++i) {
    const auto gr = out[i].ring;
    const IdealLattice lat(*gr, Sidedness::TwoSided);
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (k == lat.zero() || k == lat.whole()) continue;
      std::vector<std::string> names;
      for (Elem a : homogeneous_generators(*gr, lat[k])) names.push_back(gr->ring().name(a));
      const std::string label = "quotient(" + out[i].label + ", gens [" + join(names, ",") + "])";
      CorpusEntry q;
      q.ring = make_quotient(gr, lat[k], label).ring;
      q.label = label;
      out.push_back(std::move(q));
    }
  }
  for (const char* e :
       {"idealization(gaussian(2))", "idealization(zn(4))", "idealization(zn(4), quotient gens [2])"})
    out.push_back(base_entry(e));
  return out;
}

Corpus load_corpus(const std::filesystem::path& dir, const ParseOptions& opts) {
  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".spec") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  Corpus out;
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      out.push_back(corpus_entry(parse_spec(ss.str(), opts)));
    } catch (const Error& e) {
      throw Error(e.kind(), p.filename().string() + ":" + e.what());
    }
  }
  return out;
}

const std::vector<std::string>& property_ids() { return kIds; }

const std::string& property_statement(const std::string& id) {
  auto it = kStatements.find(id);
  if (it == kStatements.end()) fail(ErrorKind::Precondition, "unknown property " + id);
  return it->second;
}

PropertyResult run_property(const std::string& id, const Corpus& corpus,
                            const TheoremOptions& opts) {
  property_statement(id);
  Runner r(corpus, opts);
  return r.run(id);
}

std::vector<PropertyResult> run_all_properties(const Corpus& corpus, const TheoremOptions& opts) {
  Runner r(corpus, opts);
  std::vector<PropertyResult> out;
  for (const auto& id : kIds) out.push_back(r.run(id));
  return out;
}

Question1Certificate search_question1(const Corpus& corpus, const TheoremOptions& opts) {
  Runner r(corpus, opts);
  return r.question1();
}

Census run_census(const Corpus& corpus, const TheoremOptions& opts) {
  Runner r(corpus, opts);
  return r.census();
}

}  // namespace grw
