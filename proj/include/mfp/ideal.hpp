#ifndef MFP_IDEAL_HPP
#define MFP_IDEAL_HPP

#include <vector>

#include "mfp/groebner.hpp"
#include "mfp/polynomial.hpp"

namespace mfp {

/// Generators plus the ambient ring. Zero generators are dropped on
/// construction; an empty list is the zero ideal.
class IdealPresentation {
public:
  IdealPresentation() = default;
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  static IdealPresentation unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const VariableSet& variables() const { return ring_->variables(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  GroebnerBasis groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  IdealPresentation with_generators(std::vector<Polynomial> gens) const;
  /// Same ideal, generators re-sorted into a ring with another order.
  IdealPresentation in_ring(const RingPtr& target) const;

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced grevlex basis as a presentation.
IdealPresentation to_presentation(const GroebnerBasis& G, const RingPtr& ring);

bool ideal_membership(const Polynomial& f, const IdealPresentation& I);
bool is_unit_ideal(const IdealPresentation& I);
/// J subseteq I.
bool contains(const IdealPresentation& I, const IdealPresentation& J);
/// Decided by two-sided membership.
bool ideals_equal(const IdealPresentation& I, const IdealPresentation& J);

IdealPresentation sum(const IdealPresentation& I, const IdealPresentation& J);
IdealPresentation sum(const IdealPresentation& I, const std::vector<Polynomial>& extra);
IdealPresentation product(const IdealPresentation& I, const IdealPresentation& J);

/// I intersected with Q[x_{k+1..n}], expressed in the ring of the remaining
/// variables (grevlex).
IdealPresentation eliminate(const IdealPresentation& I, std::size_t k);
IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J);
/// I : J.
IdealPresentation quotient(const IdealPresentation& I, const IdealPresentation& J);

struct Saturation {
  IdealPresentation ideal;
  /// Number of quotient steps that strictly enlarged the ideal.
  std::size_t iterations = 0;
};

/// I : J^infinity by iterated quotients.
Saturation saturate(const IdealPresentation& I, const IdealPresentation& J);

/// Krull dimension of Q[x]/I; -1 for the unit ideal.
int krull_dimension(const IdealPresentation& I);
int krull_dimension(const GroebnerBasis& G, std::size_t nvars);

/// Variable set of size krull_dimension whose monomials avoid the leading
/// ideal (a maximal independent set), as a bit mask.
std::uint32_t maximal_independent_set(const GroebnerBasis& G, std::size_t nvars);

}  // namespace mfp

#endif
