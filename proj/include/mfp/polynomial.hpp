#ifndef MFP_POLYNOMIAL_HPP
#define MFP_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfp/exact_linear.hpp"

namespace mfp {

inline constexpr std::size_t kMaxVariables = 24;

/// Ordered list of distinct variable names; the position of a name is its index.
class VariableSet {
public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

private:
  std::vector<std::string> names_;
};

/// Dense exponent vector.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  /// Support is a subset of the variable indices marked in `mask`.
  bool supported_in(std::uint32_t mask) const noexcept;
  std::uint32_t support() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::string to_string(const VariableSet& vars) const;

private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

bool coprime(const Monomial& a, const Monomial& b) noexcept;

/// lex, grevlex, or a block order: grevlex on the first `split` variables,
/// ties broken by grevlex on the rest (eliminates the first block).
class MonomialOrder {
public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const noexcept { return kind_; }
  std::size_t split() const noexcept { return split_; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  std::string to_string() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}
  Kind kind_ = Kind::Grevlex;
  std::size_t split_ = 0;
};

/// Computation context: variables plus the active monomial order.
class Ring {
public:
  Ring(VariableSet vars, MonomialOrder order);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          MonomialOrder order = MonomialOrder::grevlex());

  const VariableSet& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return vars_.size(); }

  /// Same variables, different order.
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

private:
  VariableSet vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial monomial;
  Rational coefficient;
};

using RationalPoint = std::vector<Rational>;

/// Sparse polynomial over Q; terms sorted strictly descending under the
/// ring's order, no zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Terms in any order; duplicates are combined.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  /// -1 for zero.
  int total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  std::uint32_t support() const noexcept;

  /// Same polynomial re-sorted under another ring with identical variables.
  Polynomial in_ring(const RingPtr& target) const;

  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;
  /// Rational content c with *this = c * primitive().
  Rational content() const;

  Rational evaluate(const RationalPoint& p) const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// this - c * m * q, the reduction primitive.
  Polynomial sub_scaled_shift(const Rational& c, const Monomial& m, const Polynomial& q) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  std::string to_string() const;

private:
  void check_ring(const Polynomial& q) const;
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// f(x + p).
Polynomial translate(const Polynomial& f, const RationalPoint& p);

/// Simultaneous substitution x_i -> images[i] (images share one ring; the
/// result lives there). Missing entries of a map keep the variable, which
/// only makes sense when source and target ring coincide.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);
Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& assignment);

/// Write `f` as a polynomial in `var`: coefficient polynomials (free of
/// `var`), lowest degree first.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var);

/// Exact quotient a / b; throws InvalidArgument if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
/// Monic gcd (under the ring order); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// f / gcd(f, df/dx_1, ..., df/dx_n). Throws ZeroPolynomial.
Polynomial squarefree_part(const Polynomial& f);

/// Univariate view of a polynomial involving only variable `var`.
UnivariatePolynomial to_univariate(const Polynomial& f, std::size_t var);
Polynomial from_univariate(const UnivariatePolynomial& u, const RingPtr& ring, std::size_t var);

}  // namespace mfp

#endif
