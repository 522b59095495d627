#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rearr/rational.hpp"

namespace rearr {

/// True iff (1 + n kappa^2) kappa / 2 >= 2^(n+1) eps.
bool doubling_condition(const Rational& kappa, const Rational& eps, std::uint64_t n);

/// Largest n >= 0 with doubling_condition(kappa, eps, n); 0 when even n = 0
/// fails. The left side grows by a factor below 2 per step while the right
/// side doubles, so the condition fails for every n past the first failure.
/// Requires 0 < kappa < 1 and 0 < eps < 1 (std::invalid_argument otherwise).
std::uint64_t n_of_eps(const Rational& kappa, const Rational& eps);

/// kappa^3 / 4 * n_of_eps(kappa, eps): a lower bound on the normalized cost
/// of sorting any configuration well stirred at (kappa, eps).
Rational lemma_lower_bound(const Rational& kappa, const Rational& eps);

struct ChainValue {
  std::uint64_t n;
  Rational value;
};

/// v_n = (1 + n kappa^2) s - 2^n eps for n = 0..n_max. Requires 0 < s <= kappa.
std::vector<ChainValue> induction_chain(const Rational& kappa, const Rational& eps,
                                        const Rational& s, std::uint64_t n_max);

struct BoundCertificate {
  Rational kappa;
  Rational eps;
  std::uint64_t n_eps = 0;
  Rational bound;
  /// Set when n_eps == 0, i.e. the bound is the vacuous 0.
  bool degenerate = false;
  /// induction_chain at s = kappa / 2 for n = 0..n_eps.
  std::vector<ChainValue> chain;
};

BoundCertificate make_certificate(const Rational& kappa, const Rational& eps);

/// Minimal costs V(s) for target run lengths s, everything in cells of a grid
/// of `n_cells` per unit length. V(0) is implicitly 0.
struct VTable {
  std::size_t n_cells = 0;
  std::map<std::size_t, Rational> cost;
};

enum class VInequality { Floor, Splitting };

struct VWitness {
  VInequality which;
  std::size_t s;
  std::optional<std::size_t> sigma;  // arg-min of the splitting bound
  Rational lhs;                      // V(s), cells
  Rational rhs;                      // violated bound, cells
};

struct VCheckReport {
  bool holds_floor = true;      // V(s) >= s - eps
  bool holds_splitting = true;  // V(s) >= min_sigma V(s-sigma) + V(sigma) + k^2 s + (1-k^2) sigma
  std::vector<VWitness> witnesses;
};

/// Tests the floor and splitting inequalities on every tabulated s. The
/// splitting bound is checked only for s > eps and minimised over grid
/// sigma in (0, s) where V(s - sigma) and V(sigma) are both known.
/// Throws std::invalid_argument on an empty table.
VCheckReport check_V_inequalities(const VTable& table, const Rational& kappa,
                                  const Rational& eps);

}  // namespace rearr
