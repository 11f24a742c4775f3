#include "mfp/exact_linear.hpp"

#include <algorithm>
#include <cstdlib>

#include "mfp/error.hpp"

namespace mfp {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidArgument, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(c, j));
      std::swap(inv(piv, j), inv(c, j));
    }
    Rational p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
  return UnivariatePolynomial({c});
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x /= lc;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::reflect() const {
  std::vector<Rational> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  return a + Rational(-1) * b;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const Rational& k, const UnivariatePolynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= k;
  return UnivariatePolynomial(std::move(c));
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (!unit || i == 0) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] / b.leading();
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  auto g = gcd(f, f.derivative());
  return divmod(f, g).first;
}

Rational discriminant_of_quadratic(const UnivariatePolynomial& f) {
  if (f.degree() != 2) throw Error(ErrorKind::InvalidArgument, "not a quadratic");
  const Rational& a = f.coefficients()[2];
  const Rational& b = f.coefficients()[1];
  const Rational& c = f.coefficients()[0];
  return b * b - 4 * a * c;
}

// ---------------------------------------------------------------------------
// Sturm chains

namespace {

std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& f) {
  std::vector<UnivariatePolynomial> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs; monic-ish normalisation caps growth.
    Rational s = abs(r.leading());
    chain.push_back(Rational(-1) / s * r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign(const Rational& q) { return sgn(q); }

std::size_t variations_at(const std::vector<UnivariatePolynomial>& chain, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t variations_at_infinity(const std::vector<UnivariatePolynomial>& chain, bool positive) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational cauchy_bound(const UnivariatePolynomial& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.coefficients()[static_cast<std::size_t>(i)] / f.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace

std::size_t sturm_real_root_count(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  auto chain = sturm_chain(squarefree_part(f));
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::size_t sturm_count_in(const UnivariatePolynomial& f, const Rational& a, const Rational& b) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  if (!(a < b)) return 0;
  auto chain = sturm_chain(squarefree_part(f));
  return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UnivariatePolynomial& f,
                                                              const Rational& width) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  auto g = squarefree_part(f);
  std::vector<std::pair<Rational, Rational>> out;
  if (g.degree() == 0) return out;
  auto chain = sturm_chain(g);
  Rational bound = cauchy_bound(g);

  struct Work {
    Rational a, b;
    std::size_t va, vb;
  };
  std::vector<Work> stack;
  stack.push_back({-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)});
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    std::size_t count = w.va - w.vb;
    if (count == 0) continue;
    if (count == 1) {
      if (g.evaluate(w.b) == 0) {
        out.emplace_back(w.b, w.b);
        continue;
      }
      if (w.b - w.a <= width) {
        out.emplace_back(w.a, w.b);
        continue;
      }
    }
    Rational m = (w.a + w.b) / 2;
    std::size_t vm = variations_at(chain, m);
    // Right half first so the left half is popped first: output ascends.
    stack.push_back({m, w.b, vm, w.vb});
    stack.push_back({w.a, m, w.va, vm});
  }
  return out;
}

std::vector<Rational> rational_roots(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  auto g = squarefree_part(f);
  if (g.degree() <= 0) return {};
  Integer den = 1;
  for (const auto& c : g.coefficients()) den = lcm(den, Integer(c.get_den()));
  Integer lc = abs(Integer(g.leading() * den));
  // Any rational root is a multiple of 1/lc, so intervals narrower than 1/lc
  // contain at most one candidate.
  Rational width = make_rational(1, 2 * lc);
  std::vector<Rational> roots;
  for (const auto& [a, b] : isolate_real_roots(g, width)) {
    if (a == b) {
      roots.push_back(a);
      continue;
    }
    Rational scaled = a * lc;
    Integer k = scaled.get_num() / scaled.get_den();  // truncation toward zero
    for (Integer cand = k - 1; cand <= k + 2; ++cand) {
      Rational r = make_rational(cand, lc);
      if (r > a && r <= b && g.evaluate(r) == 0) {
        roots.push_back(r);
        break;
      }
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and signature

UnivariatePolynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
    }
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h(i, col) == 0) continue;
      Rational u = h(i, col) / h(col + 1, col);
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(col + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) += u * h(r, i);
    }
  }
  // p[k] = charpoly of the leading k x k block.
  std::vector<UnivariatePolynomial> p(n + 1);
  p[0] = UnivariatePolynomial::constant(1);
  const UnivariatePolynomial lambda = UnivariatePolynomial::monomial(1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    UnivariatePolynomial acc = (lambda - UnivariatePolynomial::constant(h(k - 1, k - 1))) * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      acc = acc - (prod * h(i - 1, k - 1)) * p[i - 1];
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

std::size_t sign_variations(const UnivariatePolynomial& f) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& c : f.coefficients()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Signature symmetric_signature(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "signature of a non-square matrix");
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "signature of a non-symmetric matrix");
  auto chi = characteristic_polynomial(m);
  // Strip the zero eigenvalues exactly; all remaining roots are real and
  // nonzero, so Descartes' rule is exact on both half-lines.
  std::size_t zeros = 0;
  while (zeros < chi.coefficients().size() && chi.coefficients()[zeros] == 0) ++zeros;
  std::vector<Rational> rest(chi.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                             chi.coefficients().end());
  UnivariatePolynomial q(std::move(rest));
  return {sign_variations(q), sign_variations(q.reflect())};
}

}  // namespace mfp
