// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact (integers or rationals).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rearr/bounds.hpp"
#include "rearr/cli.hpp"
#include "rearr/config.hpp"
#include "rearr/moves.hpp"
#include "rearr/solvers.hpp"
#include "rearr/torus.hpp"
#include "test_support.hpp"

using namespace rearr;
using rearr::testing::all_configs;
using rearr::testing::config_from_bits;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::cout << (v.pass ? "PASS " : "FAIL ") << name << " (" << secs << " s)";
  if (!v.detail.empty()) std::cout << ": " << v.detail;
  std::cout << std::endl;
}

Rational pow2_inv(unsigned m) {
  BigInt d = 1;
  d <<= m;
  return Rational(BigInt(1), d);
}

Verdict oracle_equivalence() {
  Verdict v;
  std::size_t compared = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<TargetPredicate> targets{TargetPredicate::sorted()};
    for (std::size_t s = 1; s <= n; ++s) targets.push_back(TargetPredicate::run(0, s));
    for (const auto& c : all_configs(n)) {
      for (const auto& t : targets) {
        const auto exact = exact_min_cost(c, t);
        const auto oracle = brute_force_min_cost(c, t);
        ++compared;
        if (exact.has_value() != oracle.has_value()) {
          v.require(false, "reachability differs on " + c.str());
          continue;
        }
        if (exact) {
          v.require(exact->cost == *oracle, "cost differs on " + c.str());
          const auto report = validate_rearrangement(exact->witness);
          v.require(report.valid && report.gamma == exact->cost &&
                        t.satisfied_by(report.final_state),
                    "witness fails on " + c.str());
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(compared) + " (configuration, target) pairs agree";
  return v;
}

Verdict worked_minimum() {
  Verdict v;
  const auto c = parse_config("1010");
  const auto exact = exact_min_cost(c, TargetPredicate::sorted());
  const auto oracle = brute_force_min_cost(c, TargetPredicate::sorted());
  v.require(exact && exact->cost == 5, "exact cost is not 5 cells");
  v.require(oracle == 5u, "oracle cost is not 5 cells");
  v.require(normalized(exact->cost, 4) == Rational(5, 4), "normalized cost is not 5/4");
  const auto report = validate_rearrangement(exact->witness);
  v.require(report.valid && report.complete && report.gamma == 5, "witness does not validate");
  v.require(report.final_state.str() == "0011", "witness does not end at 0011");
  if (v.pass) v.detail = "cost 5 cells = 5/4, witness replays to 0011";
  return v;
}

struct StirredFamily {
  Rational kappa;
  std::size_t window;
};

const std::vector<StirredFamily> kFamilies{
    {Rational(1, 4), 4}, {Rational(2, 5), 4}, {Rational(1, 3), 8}};

struct SweepResult {
  Verdict lemma;
  Verdict recursion;
};

// One pass over all 2^16 patterns serves both N = 16 criteria.
SweepResult sweep_n16() {
  SweepResult out;
  std::ostringstream lemma_detail, rec_detail;
  for (const auto& fam : kFamilies) {
    const StirringParams params(fam.kappa, fam.window);
    const Rational eps(BigInt(fam.window), BigInt(16));
    const Rational bound = lemma_lower_bound(fam.kappa, eps);
    const auto top = rearr::floor(fam.kappa * 16).convert_to<std::size_t>();
    std::size_t count = 0;
    std::uint64_t min_cost = UINT64_MAX;
    for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
      const auto c = config_from_bits(bits, 16);
      if (!is_well_stirred(c, params)) continue;
      ++count;
      const auto exact = exact_min_cost(c, TargetPredicate::sorted());
      const auto report = validate_rearrangement(exact->witness);
      out.lemma.require(report.complete && report.gamma == exact->cost,
                        "witness fails on " + c.str());
      out.lemma.require(normalized(exact->cost, 16) >= bound,
                        "cost below the bound on " + c.str());
      min_cost = std::min(min_cost, exact->cost);

      VTable table{16, {}};
      for (std::size_t s = 1; s <= top; ++s) {
        const auto v = empirical_V(c, s, 0);
        out.recursion.require(v.has_value(), "V undefined on " + c.str());
        table.cost[s] = Rational(v.value_or(0));
      }
      const auto check = check_V_inequalities(table, fam.kappa, eps);
      out.recursion.require(check.holds_floor, "floor inequality fails on " + c.str());
      out.recursion.require(check.holds_splitting, "splitting inequality fails on " + c.str());
    }
    out.lemma.require(count > 0, "empty instance set");
    lemma_detail << " (" << to_string(fam.kappa) << "," << fam.window << "): " << count
                 << " configs, min cost " << to_string(normalized(min_cost, 16))
                 << " >= bound " << to_string(bound) << ";";
    rec_detail << " (" << to_string(fam.kappa) << "," << fam.window << "): s=1.." << top << ";";
  }
  if (out.lemma.pass) out.lemma.detail = lemma_detail.str();
  if (out.recursion.pass) out.recursion.detail = rec_detail.str();
  return out;
}

Verdict n_eps_table() {
  Verdict v;
  const Rational half(1, 2);
  v.require(n_of_eps(half, pow2_inv(10)) == 8, "n(2^-10) != 8");
  v.require(n_of_eps(half, pow2_inv(20)) == 19, "n(2^-20) != 19");
  for (unsigned m = 3; m <= 40; ++m) {
    const auto eps = pow2_inv(m);
    const auto n = n_of_eps(half, eps);
    v.require(doubling_condition(half, eps, n), "condition fails at n, m=" + std::to_string(m));
    v.require(!doubling_condition(half, eps, n + 1),
              "condition holds at n+1, m=" + std::to_string(m));
    v.require(n >= m - 3, "n < m - 3 at m=" + std::to_string(m));
  }
  if (v.pass) v.detail = "n = 8, 19 at m = 10, 20; maximal and >= m-3 for m = 3..40";
  return v;
}

Verdict upper_bound_certificate() {
  Verdict v;
  for (std::size_t k = 2; k <= 12; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const auto c = gen_alternating(n, 2);
    const auto merge = merge_heuristic(c);
    const auto report = validate_rearrangement(merge);
    v.require(report.valid && report.complete, "merge incomplete at k=" + std::to_string(k));
    const Rational merge_cost = normalized(report.gamma, n);
    v.require(merge_cost <= k, "merge cost above k at k=" + std::to_string(k));
    if (k <= 4) {
      const auto exact = exact_min_cost(c, TargetPredicate::sorted());
      v.require(exact->cost <= report.gamma, "exact above merge at k=" + std::to_string(k));
    }
  }
  if (v.pass) v.detail = "k = 2..12 valid and <= k; exact <= merge for k <= 4";
  return v;
}

Verdict scaling_trend() {
  Verdict v;
  std::ostringstream detail;
  for (const auto& kappa : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
    const auto rows = cli::scaling_rows(kappa, 4, 12, 16);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t k = i + 4;
      const Rational ratio = rows[i].heur_cost / k;
      v.require(ratio > 0 && ratio <= 1, "merge/k outside (0,1] at k=" + std::to_string(k));
      if (rows[i].exact_cost) {
        v.require(rows[i].lower_bound <= *rows[i].exact_cost &&
                      *rows[i].exact_cost <= rows[i].heur_cost,
                  "sandwich broken at k=" + std::to_string(k));
      }
      if (i > 0) {
        v.require(rows[i].heur_cost >= rows[i - 1].heur_cost,
                  "merge cost decreases at k=" + std::to_string(k));
        v.require(rows[i].lower_bound >= rows[i - 1].lower_bound,
                  "lower bound decreases at k=" + std::to_string(k));
      }
    }
    detail << " kappa " << to_string(kappa) << ": merge " << to_string(rows.front().heur_cost)
           << ".." << to_string(rows.back().heur_cost) << ", bound "
           << to_string(rows.front().lower_bound) << ".." << to_string(rows.back().lower_bound)
           << ";";
  }
  if (v.pass) v.detail = detail.str();
  return v;
}

Verdict torus_conservation() {
  using namespace rearr::torus;
  Verdict v;
  std::mt19937_64 rng(20240601);
  const std::size_t m = 16;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::uint8_t> cells(m * m);
    for (auto& c : cells) c = rng() & 1;
    const GridMask mask(m, std::move(cells));
    FlowProgram program{m, {}};
    const auto len = 1 + rng() % 8;
    for (std::size_t s = 0; s < len; ++s) {
      ShearStep step{rng() & 1 ? Axis::Horizontal : Axis::Vertical,
                     std::vector<std::int64_t>(m)};
      for (auto& shift : step.shifts) shift = static_cast<std::int64_t>(rng() % 65) - 32;
      program.steps.push_back(std::move(step));
    }
    v.require(run_program(mask, program).mass() == mask.mass(),
              "mass changed in trial " + std::to_string(trial));
  }
  v.require(step_cost(linear_shear(Axis::Horizontal, 16)) == Rational(56, 16),
            "linear shear cost at M=16 is not 56/16");
  for (std::size_t k = 1; k <= 10; ++k) {
    v.require(program_cost(cat_program(k, 256)) == Rational(BigInt(2 * k * 1016), BigInt(256)),
              "cat program cost wrong at k=" + std::to_string(k));
  }
  if (v.pass) v.detail = "1000 fuzzed programs conserve mass; costs 56/16 and 2k*1016/256 exact";
  return v;
}

Verdict torus_mixing_trend() {
  using namespace rearr::torus;
  Verdict v;
  const std::size_t m = 256;
  const Rational kappa(3, 10);
  std::vector<std::size_t> radii;
  for (std::size_t r = 1; r <= m / 8; ++r) radii.push_back(r);
  const auto rows = mixing_experiment(m, 8, kappa, radii);

  std::cout << "stage,steps,cost,scale_cells,scale,cost_per_log2_scale\n";
  std::optional<std::size_t> first_mixed;
  for (const auto& row : rows) {
    std::cout << row.stage << ',' << row.steps << ',' << to_decimal(row.cost) << ',';
    if (row.scale_cells) {
      std::cout << *row.scale_cells << ','
                << to_decimal(Rational(BigInt(*row.scale_cells), BigInt(m))) << ','
                << *row.cost_per_log_scale;
      if (!first_mixed) first_mixed = row.stage;
    } else {
      std::cout << ",,";
    }
    std::cout << '\n';
  }

  v.require(!rows.front().scale_cells, "band set reported mixed at stage 0");
  v.require(rows.back().scale_cells.has_value(), "not mixed at radius <= M/8 by stage 8");
  const Rational cost_cap = Rational(8) * Rational(BigInt(2 * 1016), BigInt(256));
  v.require(rows.back().cost <= cost_cap, "stage-8 cost above 8*(2*1016/256)");
  if (v.pass) {
    v.detail = "unmixed at stage 0; first mixed at stage " + std::to_string(*first_mixed) +
               "; stage-8 scale " + std::to_string(*rows.back().scale_cells) + " cells, cost " +
               to_string(rows.back().cost);
  }
  return v;
}

}  // namespace

int main() {
  criterion("[1] oracle equivalence N=2..8", oracle_equivalence);
  criterion("[2] worked minimum 1010 -> 5 cells", worked_minimum);

  SweepResult sweep;
  bool swept = false;
  auto run_sweep = [&]() -> const SweepResult& {
    if (!swept) {
      sweep = sweep_n16();
      swept = true;
    }
    return sweep;
  };
  criterion("[3] lemma inequality N=16", [&] { return run_sweep().lemma; });
  criterion("[4] V recursion N=16", [&] { return run_sweep().recursion; });

  criterion("[5] n(eps) table", n_eps_table);
  criterion("[6] merge upper-bound certificate", upper_bound_certificate);
  criterion("[7] scaling trend k=4..12", scaling_trend);
  criterion("[8] torus conservation and cost", torus_conservation);
  criterion("[9] torus mixing trend M=256", torus_mixing_trend);

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
