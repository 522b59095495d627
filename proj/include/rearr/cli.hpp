#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rearr/rational.hpp"

namespace rearr::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInputError = 1, kResourceLimit = 2 };

/// One line of the cost-scaling study on the alternating period-2 family.
struct ScalingRow {
  Rational eps;
  std::size_t n = 0;
  Rational kappa;
  Rational heur_cost;
  std::optional<Rational> exact_cost;
  Rational lower_bound;
  std::uint64_t n_eps = 0;
};

/// Rows for N = 2^k, k = k_min..k_max, eps = 2/N. The exact solver runs only
/// when N <= exact_cap. Rows are evaluated concurrently and returned in k
/// order. Throws std::invalid_argument on bad ranges or kappa >= 1/2, and
/// std::logic_error if a row breaks lower_bound <= exact <= heuristic.
std::vector<ScalingRow> scaling_rows(const Rational& kappa, std::size_t k_min, std::size_t k_max,
                                     std::size_t exact_cap);

std::string scaling_csv(const std::vector<ScalingRow>& rows, bool rational);

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rearr::cli
