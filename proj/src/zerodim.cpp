#include "mfp/zerodim.hpp"

#include <algorithm>
#include <map>

#include "mfp/error.hpp"

namespace mfp {

namespace {

struct ExponentLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

}  // namespace

ZeroDimAlgebra ZeroDimAlgebra::build(const IdealPresentation& I) {
  ZeroDimAlgebra A;
  A.ideal_ = I;
  A.gb_ = I.groebner(MonomialOrder::grevlex());
  const std::size_t n = I.nvars();
  A.mult_.assign(n, RationalMatrix());
  if (A.gb_.is_unit()) return A;

  const auto lms = A.gb_.leading_monomials();
  // Zero-dimensional iff every variable has a pure power among the leading monomials.
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      return m.degree() == m[i] && m[i] > 0;
    });
    if (!pure)
      throw Error(ErrorKind::NotZeroDimensional, "ideal " + I.to_string() + " is not zero-dimensional");
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::map<Monomial, std::size_t, ExponentLess> seen;
  std::vector<Monomial> frontier{Monomial(n)};
  seen.emplace(Monomial(n), 0);
  std::vector<Monomial> basis{Monomial(n)};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(n, i);
        if (seen.count(c) || !standard(c)) continue;
        seen.emplace(c, 0);
        basis.push_back(c);
        next.push_back(c);
      }
    frontier = std::move(next);
  }
  const auto& ord = A.gb_.ring->order();
  std::sort(basis.begin(), basis.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  A.basis_ = std::move(basis);

  const std::size_t d = A.basis_.size();
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix M(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Polynomial prod = Polynomial::term(A.gb_.ring, A.basis_[j] * Monomial::variable(n, i), 1);
      auto col = A.coordinates(prod);
      for (std::size_t r = 0; r < d; ++r) M(r, j) = col[r];
    }
    A.mult_[i] = std::move(M);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(A.mult_[i] * A.mult_[j] == A.mult_[j] * A.mult_[i]))
        throw Error(ErrorKind::InvalidArgument, "multiplication matrices do not commute");
  return A;
}

std::vector<Rational> ZeroDimAlgebra::coordinates(const Polynomial& f) const {
  std::vector<Rational> out(basis_.size());
  if (basis_.empty()) return out;
  Polynomial r = normal_form(f.in_ring(gb_.ring), gb_.basis);
  for (const auto& t : r.terms()) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t.monomial,
                               [&](const Monomial& a, const Monomial& b) {
                                 return gb_.ring->order().compare(a, b) < 0;
                               });
    if (it == basis_.end() || !(*it == t.monomial))
      throw Error(ErrorKind::InvalidArgument, "normal form left the standard basis");
    out[static_cast<std::size_t>(it - basis_.begin())] = t.coefficient;
  }
  return out;
}

RationalMatrix ZeroDimAlgebra::mult_matrix_of(const Polynomial& f) const {
  const std::size_t d = basis_.size();
  RationalMatrix M(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = coordinates(f.in_ring(gb_.ring) * Polynomial::term(gb_.ring, basis_[j], 1));
    for (std::size_t r = 0; r < d; ++r) M(r, j) = col[r];
  }
  return M;
}

RationalMatrix ZeroDimAlgebra::trace_form() const {
  const std::size_t d = basis_.size();
  const std::size_t n = mult_.size();
  // Matrices of the basis monomials, built by peeling one variable at a time.
  std::vector<RationalMatrix> mb(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Monomial& m = basis_[k];
    if (m.is_one()) {
      mb[k] = RationalMatrix::identity(d);
      continue;
    }
    std::size_t v = 0;
    while (m[v] == 0) ++v;
    Monomial parent = m / Monomial::variable(n, v);
    auto it = std::find(basis_.begin(), basis_.end(), parent);
    mb[k] = mult_[v] * mb[static_cast<std::size_t>(it - basis_.begin())];
  }
  RationalMatrix B(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational tr = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          const Rational& x = mb[i](a, b);
          if (x != 0) tr += x * mb[j](b, a);
        }
      B(i, j) = tr;
      B(j, i) = tr;
    }
  return B;
}

PointCounts count_points(const ZeroDimAlgebra& A) {
  if (A.dimension() == 0) return {};
  RationalMatrix B = A.trace_form();
  Signature s = symmetric_signature(B);
  return {s.n_plus + s.n_minus, s.n_plus - s.n_minus};
}

PointCounts count_points(const IdealPresentation& I) { return count_points(ZeroDimAlgebra::build(I)); }

UnivariatePolynomial eliminant(const ZeroDimAlgebra& A, std::size_t var) {
  const std::size_t d = A.dimension();
  if (d == 0) return UnivariatePolynomial::constant(1);
  const RationalMatrix& M = A.mult_matrix(var);
  // Incremental echelon form over vec(M^k), tracking each row as a
  // combination of powers.
  struct Row {
    std::vector<Rational> v;
    std::vector<Rational> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  RationalMatrix power = RationalMatrix::identity(d);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Rational> v = power.entries();
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const auto& r : rows) {
      if (v[r.pivot] == 0) continue;
      Rational f = v[r.pivot] / r.v[r.pivot];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (r.v[i] != 0) v[i] -= f * r.v[i];
      for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= f * r.combo[i];
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return UnivariatePolynomial(std::move(combo)).monic();
    for (auto& r : rows) r.combo.resize(k + 1);
    rows.push_back({std::move(v), std::move(combo), piv});
    power = M * power;
  }
  throw Error(ErrorKind::InvalidArgument, "no annihilating polynomial found");
}

IdealPresentation zerodim_radical(const IdealPresentation& I) {
  ZeroDimAlgebra A = ZeroDimAlgebra::build(I);
  if (A.dimension() == 0) return IdealPresentation::unit(I.ring());
  std::vector<Polynomial> gens = I.generators();
  bool changed = false;
  for (std::size_t v = 0; v < I.nvars(); ++v) {
    UnivariatePolynomial e = eliminant(A, v);
    UnivariatePolynomial sf = squarefree_part(e).monic();
    if (sf.degree() < e.degree()) changed = true;
    gens.push_back(from_univariate(sf, I.ring(), v));
  }
  if (!changed) return to_presentation(A.groebner(), I.ring());
  return to_presentation(IdealPresentation(I.ring(), std::move(gens)).groebner(), I.ring());
}

IdealPresentation nonreduced_locus(const IdealPresentation& I) {
  IdealPresentation rad = zerodim_radical(I);
  return quotient(I, rad);
}

std::optional<std::vector<RationalPoint>> rational_points(const IdealPresentation& I) {
  IdealPresentation rad = zerodim_radical(I);
  ZeroDimAlgebra A = ZeroDimAlgebra::build(rad);
  const std::size_t npoints = A.dimension();
  std::vector<RationalPoint> points;
  if (npoints == 0) return points;
  const std::size_t n = I.nvars();
  std::vector<std::vector<Rational>> candidates(n);
  for (std::size_t v = 0; v < n; ++v) {
    candidates[v] = rational_roots(eliminant(A, v));
    if (candidates[v].empty()) return std::nullopt;
  }
  RationalPoint p(n);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) p[v] = candidates[v][idx[v]];
    bool on = std::all_of(A.groebner().basis.begin(), A.groebner().basis.end(),
                          [&](const Polynomial& g) { return g.evaluate(p) == 0; });
    if (on) points.push_back(p);
    std::size_t v = 0;
    while (v < n && ++idx[v] == candidates[v].size()) idx[v++] = 0;
    if (v == n) break;
  }
  if (points.size() != npoints) return std::nullopt;
  return points;
}

}  // namespace mfp
