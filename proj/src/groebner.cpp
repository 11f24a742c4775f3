#include "mfp/groebner.hpp"

#include <algorithm>

#include "mfp/error.hpp"

namespace mfp {

bool GroebnerBasis::is_unit() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis) lms.push_back(g.leading_monomial());
  return lms;
}

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& G) {
  for (const Polynomial* g : G)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

// Fraction-free full reduction. Returns p with scale*f - p in <G> for some
// nonzero rational scale; p is primitive.
Polynomial reduce_primitive(const Polynomial& f, const std::vector<const Polynomial*>& G) {
  if (f.is_zero()) return f;
  Polynomial p = f.primitive();
  std::size_t pos = 0;
  unsigned steps = 0;
  while (pos < p.size()) {
    const Term& t = p.terms()[pos];
    const Polynomial* g = find_reducer(t.monomial, G);
    if (!g) {
      ++pos;
      continue;
    }
    Integer a = g->leading_coefficient().get_num();
    Integer c = t.coefficient.get_num();
    Integer common = gcd(a, c);
    Rational pa = make_rational(a / common);
    Rational pc = make_rational(c / common);
    Monomial shift = t.monomial / g->leading_monomial();
    if (pa != 1) p = pa * p;
    p = p.sub_scaled_shift(pc, shift, *g);
    if (++steps % 16 == 0) p = p.primitive();
  }
  return p.primitive();
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  if (f.is_zero()) return f;
  std::vector<Polynomial> local;
  local.reserve(G.size());
  for (const auto& g : G)
    if (!g.is_zero()) local.push_back(g.in_ring(f.ring()).monic());
  Polynomial p = f;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& t = p.terms()[pos];
    const Polynomial* g = nullptr;
    for (const auto& cand : local)
      if (cand.leading_monomial().divides(t.monomial)) {
        g = &cand;
        break;
      }
    if (!g) {
      ++pos;
      continue;
    }
    Rational c = t.coefficient;
    Monomial shift = t.monomial / g->leading_monomial();
    p = p.sub_scaled_shift(c, shift, *g);
  }
  return p;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& order) {
  RingPtr r = f.ring()->order() == order ? f.ring() : f.ring()->with_order(order);
  return normal_form(f.in_ring(r), G);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (G.ring && !(f.ring()->variables() == G.ring->variables()))
    throw Error(ErrorKind::VariableSetMismatch, "normal form across rings");
  return normal_form(G.ring ? f.in_ring(G.ring) : f, G.basis);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(Rational(1) / f.leading_coefficient(), l / f.leading_monomial());
  return a.sub_scaled_shift(Rational(1) / g.leading_coefficient(), l / g.leading_monomial(), g);
}

namespace {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

class BuchbergerRun {
public:
  explicit BuchbergerRun(RingPtr ring) : ring_(std::move(ring)) {}

  void add(Polynomial h) { update(std::move(h)); }

  bool unit() const { return unit_; }

  void run() {
    while (!pairs_.empty() && !unit_) {
      auto best = select();
      CriticalPair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
      Polynomial h = reduce_primitive(s, active_pointers());
      if (!h.is_zero()) update(std::move(h));
    }
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

private:
  std::vector<const Polynomial*> active_pointers() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  std::size_t select() const {
    const auto& ord = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(Polynomial h) {
    h = reduce_primitive(h, active_pointers());
    if (h.is_zero()) return;
    if (h.is_constant()) {
      unit_ = true;
      polys_.assign(1, Polynomial::constant(ring_, 1));
      active_.assign(1, true);
      pairs_.clear();
      return;
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<CriticalPair> C;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) C.push_back({k, hi, lcm(polys_[k].leading_monomial(), lh)});

    // Chain criterion among new pairs, keeping coprime ones for the product step.
    std::vector<CriticalPair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const auto& p = C[a];
      bool keep = coprime(polys_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<CriticalPair> E;
    for (auto& p : D)
      if (!coprime(polys_[p.i].leading_monomial(), lh)) E.push_back(std::move(p));

    std::vector<CriticalPair> B;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) B.push_back(std::move(p));
    }
    for (auto& p : E) B.push_back(std::move(p));
    pairs_ = std::move(B);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    active_[hi] = true;
  }

  RingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  bool unit_ = false;
};

}  // namespace

static GroebnerBasis compute_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  RingPtr ring;
  for (const auto& g : gens) {
    if (!g.ring()) continue;
    if (!ring) {
      ring = g.ring()->order() == order ? g.ring() : g.ring()->with_order(order);
    } else if (!(ring->variables() == g.ring()->variables())) {
      throw Error(ErrorKind::VariableSetMismatch, "generators live in different rings");
    }
  }
  out.ring = ring;
  if (!ring) return out;

  // Feed low-degree generators first; it keeps the early basis small.
  std::vector<Polynomial> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g.in_ring(ring).primitive());
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  BuchbergerRun run(ring);
  for (auto& g : input) {
    run.add(std::move(g));
    if (run.unit()) break;
  }
  run.run();

  std::vector<Polynomial> basis = run.active();
  if (run.unit()) {
    out.basis = {Polynomial::constant(ring, 1)};
    return out;
  }
  // Inter-reduce the minimal basis.
  std::vector<Polynomial> reduced;
  reduced.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < basis.size(); ++m)
      if (m != k) others.push_back(basis[m]);
    reduced.push_back(normal_form(basis[k], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  out.basis = std::move(reduced);
  return out;
}

namespace {
thread_local GroebnerObserver observer;
}

GroebnerObserver set_groebner_observer(GroebnerObserver fn) {
  std::swap(observer, fn);
  return fn;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  GroebnerBasis G = compute_basis(gens, order);
  if (observer) observer(G);
  return G;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    for (std::size_t j = i + 1; j < G.basis.size(); ++j)
      if (!normal_form(s_polynomial(G.basis[i], G.basis[j]), G.basis).is_zero()) return false;
  return true;
}

}  // namespace mfp
