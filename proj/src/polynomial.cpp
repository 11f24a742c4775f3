#include "mfp/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mfp/error.hpp"

namespace mfp {

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw Error(ErrorKind::InvalidArgument, "too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (value > 0xFFFFu) throw Error(ErrorKind::InvalidArgument, "exponent overflow");
  deg_ = deg_ - e_[i] + value;
  e_[i] = static_cast<Exponent>(value);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) s |= (1u << i);
  return s;
}

bool Monomial::supported_in(std::uint32_t mask) const noexcept { return (support() & ~mask) == 0; }

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    unsigned e = unsigned(a.e_[i]) + unsigned(b.e_[i]);
    if (e > 0xFFFFu) throw Error(ErrorKind::InvalidArgument, "exponent overflow");
    m.e_[i] = static_cast<Monomial::Exponent>(e);
  }
  m.deg_ = a.deg_ + b.deg_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) m.e_[i] = static_cast<Monomial::Exponent>(a.e_[i] - b.e_[i]);
  m.deg_ = a.deg_ - b.deg_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) m.set(i, std::max(a.e_[i], b.e_[i]));
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) m.set(i, std::min(a.e_[i], b.e_[i]));
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  return (a.support() & b.support()) == 0;
}

std::string Monomial::to_string(const VariableSet& vars) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case Kind::Block: {
      std::size_t k = std::min(split_, a.size());
      int c = grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "elim:" + std::to_string(split_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(VariableSet vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(VariableSet(std::move(names)), order);
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return std::make_shared<const Ring>(vars_, order);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const auto& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->nvars(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::uint32_t Polynomial::support() const noexcept {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.monomial.support();
  return s;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!(target->variables() == ring_->variables()))
    throw Error(ErrorKind::VariableSetMismatch, "re-sorting into a ring with different variables");
  if (target == ring_) return *this;
  return Polynomial(target, terms_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading_coefficient()) * *this;
}

Rational Polynomial::content() const {
  if (is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    num = gcd(num, Integer(t.coefficient.get_num()));
    den = lcm(den, Integer(t.coefficient.get_den()));
  }
  Rational c = make_rational(num, den);
  if (leading_coefficient() < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (c == 1) return *this;
  return (Rational(1) / c) * *this;
}

Rational Polynomial::evaluate(const RationalPoint& p) const {
  if (p.size() != ring_->nvars())
    throw Error(ErrorKind::VariableSetMismatch, "point dimension does not match the ring");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < p.size() && v != 0; ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), p[i].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), p[i].get_den_mpz_t(), e);
      v *= pw;
    }
    acc += v;
  }
  return acc;
}

void Polynomial::check_ring(const Polynomial& q) const {
  if (ring_ == q.ring_) return;
  if (!ring_ || !q.ring_ || !(ring_->variables() == q.ring_->variables()) ||
      !(ring_->order() == q.ring_->order()))
    throw Error(ErrorKind::VariableSetMismatch, "operands live in different polynomial rings");
}

namespace {

// Merge two descending term lists: a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::size_t a_from, const std::vector<Term>& b,
                              const MonomialOrder& ord, const Rational* scale,
                              const Monomial* shift) {
  std::vector<Term> out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from, j = 0;
  auto bterm = [&](std::size_t k) {
    Term t{shift ? b[k].monomial * *shift : b[k].monomial, b[k].coefficient};
    if (scale) t.coefficient *= *scale;
    return t;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = bterm(j);
    if (i == a.size()) {
      out.push_back(std::move(tb));
      ++j;
      continue;
    }
    int c = ord.compare(a[i].monomial, tb.monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Rational s = a[i].coefficient + tb.coefficient;
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.is_zero()) return *this;
  if (!ring_) ring_ = q.ring_;
  check_ring(q);
  terms_ = merge_terms(terms_, 0, q.terms_, ring_->order(), nullptr, nullptr);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.is_zero()) return *this;
  if (!ring_) ring_ = q.ring_;
  check_ring(q);
  Rational minus_one = -1;
  terms_ = merge_terms(terms_, 0, q.terms_, ring_->order(), &minus_one, nullptr);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ && b.ring_) a.check_ring(b);
  RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial acc(ring);
  for (const auto& t : small.terms_) {
    acc.terms_ = merge_terms(acc.terms_, 0, large.terms_, ring->order(), &t.coefficient, &t.monomial);
  }
  return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return Polynomial(a.ring_);
  Polynomial p = a;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (!(a.ring_->variables() == b.ring_->variables())) return false;
  if (a.ring_->order() == b.ring_->order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          a.terms_[i].coefficient != b.terms_[i].coefficient)
        return false;
    return true;
  }
  return (a - b.in_ring(a.ring_)).is_zero();
}

Polynomial Polynomial::sub_scaled_shift(const Rational& c, const Monomial& m, const Polynomial& q) const {
  check_ring(q);
  Rational neg = -c;
  Polynomial r(ring_);
  r.terms_ = merge_terms(terms_, 0, q.terms_, ring_->order(), &neg, &m);
  return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational a = abs(t.coefficient);
    if (out.empty()) {
      if (t.coefficient < 0) out += "-";
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += t.monomial.to_string(ring_->variables());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coefficient * static_cast<long>(e)});
  }
  return Polynomial(f.ring(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const std::size_t n = f.ring()->nvars();
  if (images.size() != n)
    throw Error(ErrorKind::VariableSetMismatch, "substitution needs one image per variable");
  RingPtr target = images.empty() ? f.ring() : images[0].ring();
  for (const auto& im : images)
    if (!(im.ring()->variables() == target->variables()) || !(im.ring()->order() == target->order()))
      throw Error(ErrorKind::VariableSetMismatch, "substitution images live in different rings");
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial acc(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.monomial[i];
      if (e) prod = prod * power_of(i, e);
    }
    acc += prod;
  }
  return acc;
}

Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& assignment) {
  std::vector<Polynomial> images;
  RingPtr target = assignment.empty() ? f.ring() : assignment.begin()->second.ring();
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      if (!(target->variables() == f.ring()->variables()))
        throw Error(ErrorKind::VariableSetMismatch, "partial substitution across rings");
      images.push_back(Polynomial::variable(target, i));
    }
  }
  return substitute(f, images);
}

Polynomial translate(const Polynomial& f, const RationalPoint& p) {
  if (p.size() != f.ring()->nvars())
    throw Error(ErrorKind::VariableSetMismatch, "point dimension does not match the ring");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.size(); ++i)
    images.push_back(Polynomial::variable(f.ring(), i) + Polynomial::constant(f.ring(), p[i]));
  return substitute(f, images);
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::vector<std::vector<Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(f.ring(), std::move(b));
  return out;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  Polynomial b2 = b.in_ring(a.ring());
  std::vector<Term> q;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!b2.leading_monomial().divides(lt.monomial))
      throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    Monomial m = lt.monomial / b2.leading_monomial();
    Rational c = lt.coefficient / b2.leading_coefficient();
    q.push_back({m, c});
    r = r.sub_scaled_shift(c, m, b2);
  }
  return Polynomial(a.ring(), std::move(q));
}

namespace {

Polynomial lowest_variable_gcd(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial g(f.ring());
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : lowest_variable_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo remainder of a by b in `var` (scaled by powers of lc_var(b)).
Polynomial prem(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lcb = coefficients_in(b, var).back();
  const auto& ring = a.ring();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const unsigned da = a.degree_in(var);
    Polynomial lca = coefficients_in(a, var).back();
    Polynomial shift = Polynomial::term(ring, Monomial::variable(ring->nvars(), var, da - db), 1);
    a = lcb * a - lca * shift * b;
    a = a.primitive();
  }
  return a;
}

Polynomial lowest_variable_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  std::uint32_t sup = a.support() | b.support();
  std::size_t var = 0;
  while (!(sup & (1u << var))) ++var;
  if (a.degree_in(var) == 0) return lowest_variable_gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return lowest_variable_gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  Polynomial cg = lowest_variable_gcd(ca, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    Polynomial r = prem(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = Polynomial::constant(a.ring(), 1);
      break;
    }
    pa = std::move(pb);
    pb = divide_exact(r, content_in(r, var));
  }
  return (cg * pb).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && !(a.ring()->variables() == b.ring()->variables()))
    throw Error(ErrorKind::VariableSetMismatch, "gcd across rings");
  return lowest_variable_gcd(a, b.is_zero() ? b : b.in_ring(a.ring()));
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  Polynomial g = f;
  for (std::size_t i = 0; i < f.ring()->nvars() && !g.is_constant(); ++i) {
    Polynomial d = partial_derivative(f, i);
    if (!d.is_zero()) g = gcd(g, d);
  }
  if (g.is_constant()) return f;
  return divide_exact(f, g);
}

UnivariatePolynomial to_univariate(const Polynomial& f, std::size_t var) {
  std::vector<Rational> c(f.is_zero() ? 0 : f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != t.monomial[var])
      throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate in the requested variable");
    c[t.monomial[var]] += t.coefficient;
  }
  return UnivariatePolynomial(std::move(c));
}

Polynomial from_univariate(const UnivariatePolynomial& u, const RingPtr& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.coefficients().size(); ++i)
    if (u.coefficients()[i] != 0)
      terms.push_back({Monomial::variable(ring->nvars(), var, static_cast<unsigned>(i)), u.coefficients()[i]});
  return Polynomial(ring, std::move(terms));
}

}  // namespace mfp
