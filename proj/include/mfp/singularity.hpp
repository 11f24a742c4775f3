#ifndef MFP_SINGULARITY_HPP
#define MFP_SINGULARITY_HPP

#include <optional>
#include <vector>

#include "mfp/ideal.hpp"

namespace mfp {

/// Entry (i, j) is the partial derivative of generator i by variable j.
class JacobianMatrix {
public:
  JacobianMatrix() = default;
  JacobianMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> entries);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return entries_.size(); }
  std::size_t cols() const noexcept { return ring_ ? ring_->nvars() : 0; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  RationalMatrix evaluate(const RationalPoint& p) const;

private:
  RingPtr ring_;
  std::vector<std::vector<Polynomial>> entries_;
};

JacobianMatrix jacobian(const IdealPresentation& I);

std::size_t rank_at(const JacobianMatrix& M, const RationalPoint& p);

/// Ideal of all r x r minors, each made primitive. r = 0 gives <1>.
/// With `modulo`, entries and products are reduced by that Groebner basis.
/// Throws RankTooLarge.
IdealPresentation minors_ideal(const JacobianMatrix& M, std::size_t r, const GroebnerBasis* modulo = nullptr);

/// I + (c-minors of the Jacobian), c = nvars - dim I. `dimension` skips the
/// dimension computation when already known. Throws DimensionUnknown for
/// the unit ideal.
IdealPresentation singular_locus_ideal(const IdealPresentation& I, std::optional<int> dimension = std::nullopt);

/// Jacobian criterion at p. Throws PointNotOnVariety.
bool is_smooth_at(const IdealPresentation& I, const RationalPoint& p, std::optional<int> dimension = std::nullopt);

enum class RadicalityVerdict { RadicalEquidimensional, Radical, Unknown };
enum class RadicalityReason { PrincipalSquarefree, CompleteIntersectionZeroDimSingLocus, UserAsserted, None };

const char* to_string(RadicalityVerdict v) noexcept;
const char* to_string(RadicalityReason r) noexcept;

struct RadicalityCertificate {
  RadicalityVerdict verdict = RadicalityVerdict::Unknown;
  RadicalityReason reason = RadicalityReason::None;
  /// A principal squarefree ideal is also equidimensional.
  bool equidimensional = false;
  /// Dimension of the singular locus ideal when it was computed.
  std::optional<int> singular_locus_dimension;

  bool radical() const noexcept { return verdict != RadicalityVerdict::Unknown; }
};

/// Sufficient checks only; anything else is Unknown.
RadicalityCertificate radicality_certificate(const IdealPresentation& I);

}  // namespace mfp

#endif
