#include "mfp/singularity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "mfp/error.hpp"

namespace mfp {

JacobianMatrix::JacobianMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {}

RationalMatrix JacobianMatrix::evaluate(const RationalPoint& p) const {
  RationalMatrix out(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out(i, j) = entries_[i][j].evaluate(p);
  return out;
}

JacobianMatrix jacobian(const IdealPresentation& I) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& g : I.generators()) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < I.nvars(); ++j) row.push_back(partial_derivative(g, j));
    rows.push_back(std::move(row));
  }
  return JacobianMatrix(I.ring(), std::move(rows));
}

std::size_t rank_at(const JacobianMatrix& M, const RationalPoint& p) {
  if (M.rows() == 0) return 0;
  return rank(M.evaluate(p));
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IdealPresentation minors_ideal(const JacobianMatrix& M, std::size_t r, const GroebnerBasis* modulo) {
  const RingPtr& ring = M.ring();
  if (r == 0) return IdealPresentation::unit(ring);
  if (r > std::min(M.rows(), M.cols()))
    throw Error(ErrorKind::RankTooLarge, "no " + std::to_string(r) + "-minors in a " + std::to_string(M.rows()) +
                                             "x" + std::to_string(M.cols()) + " matrix");
  auto reduce = [&](const Polynomial& f) {
    return modulo ? normal_form(f.in_ring(modulo->ring), *modulo).in_ring(ring) : f;
  };
  std::vector<std::vector<Polynomial>> entries(M.rows(), std::vector<Polynomial>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) entries[i][j] = reduce(M(i, j));

  std::vector<Polynomial> gens;
  auto keep = [&](const Polynomial& f) {
    if (f.is_zero()) return;
    Polynomial g = f.primitive();
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  };
  for_each_subset(M.rows(), r, [&](const std::vector<std::size_t>& rs) {
    // Laplace expansion from the bottom row up, memoised on the column set.
    std::map<std::uint32_t, Polynomial> level;
    for (std::size_t j = 0; j < M.cols(); ++j) level.emplace(1u << j, entries[rs[r - 1]][j]);
    for (std::size_t k = 2; k <= r; ++k) {
      std::size_t row = rs[r - k];
      std::map<std::uint32_t, Polynomial> next;
      for_each_subset(M.cols(), k, [&](const std::vector<std::size_t>& cs) {
        std::uint32_t mask = 0;
        for (auto c : cs) mask |= 1u << c;
        Polynomial det(ring);
        for (std::size_t pos = 0; pos < k; ++pos) {
          const Polynomial& a = entries[row][cs[pos]];
          if (a.is_zero()) continue;
          auto it = level.find(mask & ~(1u << cs[pos]));
          if (it == level.end() || it->second.is_zero()) continue;
          Polynomial t = reduce(a * it->second);
          if (pos % 2) det -= t;
          else det += t;
        }
        next.emplace(mask, std::move(det));
      });
      level = std::move(next);
    }
    for (const auto& [mask, det] : level) keep(det);
  });
  return IdealPresentation(ring, std::move(gens));
}

IdealPresentation singular_locus_ideal(const IdealPresentation& I, std::optional<int> dimension) {
  int dim = dimension ? *dimension : krull_dimension(I);
  if (dim < 0) throw Error(ErrorKind::DimensionUnknown, "the unit ideal has no dimension");
  std::size_t c = I.nvars() - static_cast<std::size_t>(dim);
  return sum(I, minors_ideal(jacobian(I), c));
}

bool is_smooth_at(const IdealPresentation& I, const RationalPoint& p, std::optional<int> dimension) {
  if (p.size() != I.nvars())
    throw Error(ErrorKind::VariableSetMismatch, "point has " + std::to_string(p.size()) + " coordinates, ring has " +
                                                    std::to_string(I.nvars()));
  for (const auto& g : I.generators())
    if (g.evaluate(p) != 0) throw Error(ErrorKind::PointNotOnVariety, "generator " + g.to_string() + " does not vanish");
  int dim = dimension ? *dimension : krull_dimension(I);
  if (dim < 0) throw Error(ErrorKind::DimensionUnknown, "the unit ideal has no dimension");
  return rank_at(jacobian(I), p) == I.nvars() - static_cast<std::size_t>(dim);
}

const char* to_string(RadicalityVerdict v) noexcept {
  switch (v) {
    case RadicalityVerdict::RadicalEquidimensional: return "radical-equidimensional";
    case RadicalityVerdict::Radical: return "radical";
    case RadicalityVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(RadicalityReason r) noexcept {
  switch (r) {
    case RadicalityReason::PrincipalSquarefree: return "principal-squarefree";
    case RadicalityReason::CompleteIntersectionZeroDimSingLocus: return "complete-intersection-small-singular-locus";
    case RadicalityReason::UserAsserted: return "user-asserted";
    case RadicalityReason::None: return "none";
  }
  return "none";
}

RadicalityCertificate radicality_certificate(const IdealPresentation& I) {
  RadicalityCertificate cert;
  const auto& gens = I.generators();
  if (gens.size() == 1 && !gens[0].is_constant()) {
    if (squarefree_part(gens[0]).total_degree() == gens[0].total_degree()) {
      cert.verdict = RadicalityVerdict::Radical;
      cert.reason = RadicalityReason::PrincipalSquarefree;
      cert.equidimensional = true;
      return cert;
    }
  }
  int dim = krull_dimension(I);
  if (dim < 0) return cert;
  if (gens.size() != I.nvars() - static_cast<std::size_t>(dim)) return cert;
  int sdim = krull_dimension(singular_locus_ideal(I, dim));
  cert.singular_locus_dimension = sdim;
  if (sdim < dim) {
    cert.verdict = RadicalityVerdict::RadicalEquidimensional;
    cert.reason = RadicalityReason::CompleteIntersectionZeroDimSingLocus;
    cert.equidimensional = true;
  }
  return cert;
}

}  // namespace mfp
