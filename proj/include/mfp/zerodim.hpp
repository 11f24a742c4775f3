#ifndef MFP_ZERODIM_HPP
#define MFP_ZERODIM_HPP

#include <vector>

#include "mfp/exact_linear.hpp"
#include "mfp/ideal.hpp"

namespace mfp {

/// Finite-dimensional quotient Q[x]/I: standard monomials and the matrices
/// of multiplication by each variable (column j = coordinates of x_i * b_j).
class ZeroDimAlgebra {
public:
  /// Throws NotZeroDimensional.
  static ZeroDimAlgebra build(const IdealPresentation& I);

  const IdealPresentation& ideal() const noexcept { return ideal_; }
  const GroebnerBasis& groebner() const noexcept { return gb_; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const RationalMatrix& mult_matrix(std::size_t var) const { return mult_.at(var); }
  const std::vector<RationalMatrix>& mult_matrices() const noexcept { return mult_; }

  /// Coordinates of NF(f) on the standard basis.
  std::vector<Rational> coordinates(const Polynomial& f) const;
  /// Matrix of multiplication by f.
  RationalMatrix mult_matrix_of(const Polynomial& f) const;
  /// B(b_i, b_j) = Trace(multiplication by b_i * b_j).
  RationalMatrix trace_form() const;

private:
  IdealPresentation ideal_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::vector<RationalMatrix> mult_;
};

struct PointCounts {
  std::size_t complex_distinct = 0;
  std::size_t real_distinct = 0;
  friend bool operator==(const PointCounts&, const PointCounts&) = default;
};

/// Hermite counting: rank and signature of the trace form.
PointCounts count_points(const ZeroDimAlgebra& A);
PointCounts count_points(const IdealPresentation& I);

/// Minimal polynomial of multiplication by x_var.
UnivariatePolynomial eliminant(const ZeroDimAlgebra& A, std::size_t var);

/// sqrt(I) for zero-dimensional I (Seidenberg), as a reduced-GB presentation.
IdealPresentation zerodim_radical(const IdealPresentation& I);

/// I : sqrt(I); its variety is the set of non-reduced points of V(I).
IdealPresentation nonreduced_locus(const IdealPresentation& I);

/// All points of V(I) when every one of them is rational; std::nullopt if
/// some point has an irrational coordinate.
std::optional<std::vector<RationalPoint>> rational_points(const IdealPresentation& I);

}  // namespace mfp

#endif
