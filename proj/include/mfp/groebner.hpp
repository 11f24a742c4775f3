#ifndef MFP_GROEBNER_HPP
#define MFP_GROEBNER_HPP

#include <functional>
#include <vector>

#include "mfp/polynomial.hpp"

namespace mfp {

struct GroebnerBasis {
  std::vector<Polynomial> basis;
  MonomialOrder order = MonomialOrder::grevlex();
  bool reduced = false;
  RingPtr ring;

  bool is_unit() const;
  bool is_zero_ideal() const { return basis.empty(); }
  std::vector<Monomial> leading_monomials() const;
};

/// Fully reduced remainder of f modulo G (under f's ring order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of <gens> under `order`. Zero generators are
/// ignored; an all-zero input yields the empty basis (the zero ideal).
/// Result polynomials live in a ring carrying `order`. Sorted ascending by
/// leading monomial, monic.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Called with every basis `buchberger` returns on this thread; used by
/// self-checking test harnesses. Returns the previous observer.
using GroebnerObserver = std::function<void(const GroebnerBasis&)>;
GroebnerObserver set_groebner_observer(GroebnerObserver fn);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

}  // namespace mfp

#endif
