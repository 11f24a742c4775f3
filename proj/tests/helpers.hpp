#ifndef MFP_TESTS_HELPERS_HPP
#define MFP_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "mfp/ideal.hpp"
#include "mfp/parse.hpp"

namespace mfp::testing {

inline RingPtr ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring::make(std::move(names), order);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline IdealPresentation ideal(const RingPtr& r, std::vector<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return IdealPresentation(r, std::move(ps));
}

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline Rational random_rational(std::mt19937& rng, int span = 9, int maxden = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, maxden);
  return make_rational(num(rng), den(rng));
}

/// Random polynomial with a few small terms of bounded degree.
inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& r, int terms = 4, unsigned maxdeg = 3) {
  std::uniform_int_distribution<unsigned> e(0, maxdeg);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m(r->nvars());
    unsigned budget = maxdeg;
    for (std::size_t i = 0; i < r->nvars(); ++i) {
      unsigned x = std::min(e(rng), budget);
      m.set(i, x);
      budget -= x;
    }
    ts.push_back({m, random_rational(rng)});
  }
  return Polynomial(r, std::move(ts));
}

}  // namespace mfp::testing

#endif
