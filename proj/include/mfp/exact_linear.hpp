#ifndef MFP_EXACT_LINEAR_HPP
#define MFP_EXACT_LINEAR_HPP

// Exact rational arithmetic, dense rational matrices, univariate
// polynomials and the real-root / signature machinery built on them.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mfp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical n/d. Throws InvalidArgument for d == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_symmetric() const;
  Rational trace() const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(RationalMatrix m);
/// Inverse of a square nonsingular matrix; throws InvalidArgument otherwise.
RationalMatrix inverse(const RationalMatrix& m);

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class UnivariatePolynomial {
public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  static UnivariatePolynomial constant(const Rational& c);
  static UnivariatePolynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  /// p(-x).
  UnivariatePolynomial reflect() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "z") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
/// Monic gcd (zero if both are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f);
Rational discriminant_of_quadratic(const UnivariatePolynomial& f);

/// Number of distinct real roots. Throws ZeroPolynomial.
std::size_t sturm_real_root_count(const UnivariatePolynomial& f);

/// Distinct real roots in the half-open interval (a, b].
std::size_t sturm_count_in(const UnivariatePolynomial& f, const Rational& a, const Rational& b);

/// Isolating intervals (a, b] for the distinct real roots, ascending. Each
/// interval is either degenerate (a == b, the root is rational and exact) or
/// has width at most `width`.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UnivariatePolynomial& f,
                                                              const Rational& width);

/// All rational roots, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UnivariatePolynomial& f);

/// det(lambda*Id - M), via Hessenberg reduction. Throws NotSquare.
UnivariatePolynomial characteristic_polynomial(const RationalMatrix& m);

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sign variations of the coefficient sequence, zeros skipped.
std::size_t sign_variations(const UnivariatePolynomial& f);

/// Inertia of a symmetric matrix. Throws NotSymmetric / NotSquare.
Signature symmetric_signature(const RationalMatrix& m);

}  // namespace mfp

#endif
