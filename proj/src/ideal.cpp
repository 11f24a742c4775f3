#include "mfp/ideal.hpp"

#include <bit>

#include "mfp/error.hpp"

namespace mfp {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::InvalidArgument, "ideal without a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!(g.ring()->variables() == ring_->variables()))
      throw Error(ErrorKind::VariableSetMismatch, "generator outside the ideal's ring");
    gens_.push_back(g.in_ring(ring_));
  }
}

IdealPresentation IdealPresentation::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return IdealPresentation(std::move(ring), {one});
}

GroebnerBasis IdealPresentation::groebner(const MonomialOrder& order) const {
  GroebnerBasis G = buchberger(gens_, order);
  if (!G.ring) G.ring = ring_->order() == order ? ring_ : ring_->with_order(order);
  return G;
}

IdealPresentation IdealPresentation::with_generators(std::vector<Polynomial> gens) const {
  return IdealPresentation(ring_, std::move(gens));
}

IdealPresentation IdealPresentation::in_ring(const RingPtr& target) const {
  return IdealPresentation(target, gens_);
}

std::string IdealPresentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ">";
}

IdealPresentation to_presentation(const GroebnerBasis& G, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : G.basis) gens.push_back(g.in_ring(ring));
  return IdealPresentation(ring, std::move(gens));
}

bool ideal_membership(const Polynomial& f, const IdealPresentation& I) {
  if (f.is_zero()) return true;
  return normal_form(f, I.groebner()).is_zero();
}

bool is_unit_ideal(const IdealPresentation& I) { return I.groebner().is_unit(); }

bool contains(const IdealPresentation& I, const IdealPresentation& J) {
  GroebnerBasis G = I.groebner();
  for (const auto& g : J.generators())
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

bool ideals_equal(const IdealPresentation& I, const IdealPresentation& J) {
  return contains(I, J) && contains(J, I);
}

IdealPresentation sum(const IdealPresentation& I, const IdealPresentation& J) {
  return sum(I, J.generators());
}

IdealPresentation sum(const IdealPresentation& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : extra) gens.push_back(g);
  return IdealPresentation(I.ring(), std::move(gens));
}

IdealPresentation product(const IdealPresentation& I, const IdealPresentation& J) {
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g.in_ring(I.ring()));
  return IdealPresentation(I.ring(), std::move(gens));
}

namespace {

// Maps a polynomial of a ring with `k` leading extra variables (that it does
// not involve) into `target`, dropping those variables.
Polynomial drop_leading(const Polynomial& f, std::size_t k, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = target->nvars();
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.monomial[i + k]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

// Embeds f into a ring with `k` extra leading variables.
Polynomial lift_leading(const Polynomial& f, std::size_t k, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) m.set(i + k, t.monomial[i]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

std::string fresh_name(const VariableSet& vars, std::string base) {
  while (vars.index_of(base)) base += "_";
  return base;
}

// Generators of I intersected with the subring of the last n-k variables,
// computed in `ring` (block order on k) and returned in `target`.
IdealPresentation eliminate_into(const std::vector<Polynomial>& gens, const RingPtr& ring, std::size_t k,
                                 const RingPtr& target) {
  GroebnerBasis G = buchberger(gens, MonomialOrder::block(k));
  std::uint32_t first_block = (k >= 32) ? 0xFFFFFFFFu : ((1u << k) - 1u);
  std::vector<Polynomial> kept;
  for (const auto& g : G.basis)
    if ((g.support() & first_block) == 0) kept.push_back(drop_leading(g, k, target));
  (void)ring;
  return IdealPresentation(target, std::move(kept));
}

}  // namespace

IdealPresentation eliminate(const IdealPresentation& I, std::size_t k) {
  const std::size_t n = I.nvars();
  if (k == 0 || k >= n) throw Error(ErrorKind::InvalidArgument, "eliminate needs 0 < k < number of variables");
  std::vector<std::string> rest(I.variables().names().begin() + static_cast<std::ptrdiff_t>(k),
                                I.variables().names().end());
  RingPtr target = Ring::make(std::move(rest));
  RingPtr block = I.ring()->with_order(MonomialOrder::block(k));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.in_ring(block));
  return eliminate_into(gens, block, k, target);
}

IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J) {
  if (!(I.variables() == J.variables()))
    throw Error(ErrorKind::VariableSetMismatch, "intersection of ideals in different rings");
  if (I.generators().empty() || J.generators().empty()) return IdealPresentation(I.ring(), {});
  std::vector<std::string> names{fresh_name(I.variables(), "t")};
  for (const auto& n : I.variables().names()) names.push_back(n);
  RingPtr ext = Ring::make(std::move(names), MonomialOrder::block(1));
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * lift_leading(f, 1, ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift_leading(g, 1, ext));
  IdealPresentation out = eliminate_into(gens, ext, 1, I.ring()->with_order(MonomialOrder::grevlex()));
  return out.in_ring(I.ring());
}

IdealPresentation quotient(const IdealPresentation& I, const IdealPresentation& J) {
  if (J.generators().empty()) throw Error(ErrorKind::InvalidArgument, "quotient by the zero ideal");
  std::optional<IdealPresentation> acc;
  for (const auto& g : J.generators()) {
    IdealPresentation principal(I.ring(), {g});
    IdealPresentation meet = intersect(I, principal);
    std::vector<Polynomial> divided;
    for (const auto& h : meet.generators()) divided.push_back(divide_exact(h, g.in_ring(h.ring())));
    IdealPresentation part(I.ring(), std::move(divided));
    acc = acc ? intersect(*acc, part) : part;
  }
  return to_presentation(acc->groebner(), I.ring());
}

Saturation saturate(const IdealPresentation& I, const IdealPresentation& J) {
  Saturation s{to_presentation(I.groebner(), I.ring()), 0};
  while (true) {
    IdealPresentation next = quotient(s.ideal, J);
    if (contains(s.ideal, next)) break;
    s.ideal = std::move(next);
    ++s.iterations;
  }
  return s;
}

std::uint32_t maximal_independent_set(const GroebnerBasis& G, std::size_t nvars) {
  if (G.is_unit()) return 0;
  auto lms = G.leading_monomials();
  std::uint32_t best = 0;
  int best_size = -1;
  const std::uint32_t limit = nvars >= 32 ? 0xFFFFFFFFu : (1u << nvars);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (size <= best_size) continue;
    bool independent = true;
    for (const auto& m : lms)
      if (m.supported_in(mask)) {
        independent = false;
        break;
      }
    if (independent) {
      best = mask;
      best_size = size;
    }
  }
  return best;
}

int krull_dimension(const GroebnerBasis& G, std::size_t nvars) {
  if (G.is_unit()) return -1;
  return std::popcount(maximal_independent_set(G, nvars));
}

int krull_dimension(const IdealPresentation& I) { return krull_dimension(I.groebner(), I.nvars()); }

}  // namespace mfp
