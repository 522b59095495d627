#include "rearr/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rearr/bounds.hpp"
#include "rearr/config.hpp"
#include "rearr/moves.hpp"
#include "rearr/serialize.hpp"
#include "rearr/solvers.hpp"
#include "rearr/torus.hpp"

namespace rearr::cli {

namespace {

// Input problems the user can fix; mapped to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Configuration read_config(const std::string& path) {
  try {
    return parse_config(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational flag_rational(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

TargetPredicate parse_target(const std::string& text) {
  if (text == "sorted") {
    return TargetPredicate::sorted();
  }
  // run:COLOR:S
  if (text.rfind("run:", 0) == 0) {
    const auto rest = text.substr(4);
    const auto colon = rest.find(':');
    if (colon == 1 && (rest[0] == '0' || rest[0] == '1') && colon + 1 < rest.size()) {
      const auto len = rest.substr(colon + 1);
      if (len.find_first_not_of("0123456789") == std::string::npos) {
        return TargetPredicate::run(static_cast<Cell>(rest[0] - '0'), std::stoul(len));
      }
    }
  }
  throw InputError("--target must be 'sorted' or 'run:COLOR:S', got '" + text + "'");
}

std::string csv_number(const Rational& r, bool rational) {
  return rational ? to_string(r) : to_decimal(r);
}

struct GenArgs {
  std::size_t n = 0;
  std::string pattern = "alternating";
  std::size_t period = 2;
  std::string kappa;
  std::size_t window = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_tries = 100000;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.pattern == "alternating") {
    out << gen_alternating(a.n, a.period).str() << '\n';
    return kOk;
  }
  if (a.kappa.empty() || a.window == 0) {
    throw InputError("--pattern random needs --kappa and --window");
  }
  const StirringParams params(flag_rational(a.kappa, "kappa"), a.window);
  out << gen_random_stirred(a.n, params, a.seed, a.max_tries).str() << '\n';
  return kOk;
}

struct SolveArgs {
  std::string input;
  std::string target = "sorted";
  std::string method = "exact";
  std::uint64_t limit = SolveOptions{}.state_limit;
  std::size_t cap = SolveOptions{}.max_cells;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Configuration c = read_config(a.input);
  if (a.method == "merge" || a.method == "bubble") {
    if (a.target != "sorted") {
      throw InputError("heuristics only support --target sorted");
    }
    const Rearrangement r = a.method == "merge" ? merge_heuristic(c) : bubble_heuristic(c);
    out << costed_json(r).dump() << '\n';
    return kOk;
  }
  const TargetPredicate target = parse_target(a.target);
  auto result = exact_min_cost(c, target, SolveOptions{a.limit, a.cap});
  if (!result) {
    err << "target '" << a.target << "' is unreachable from " << c.str() << '\n';
    return kResourceLimit;
  }
  out << to_json(*result).dump() << '\n';
  return kOk;
}

int cmd_bound(const std::string& kappa, const std::string& eps, std::ostream& out) {
  const auto cert = make_certificate(flag_rational(kappa, "kappa"), flag_rational(eps, "eps"));
  out << to_json(cert).dump() << '\n';
  return kOk;
}

int cmd_check(const std::string& input, const std::string& kappa, std::size_t window,
              std::ostream& out) {
  const Configuration c = read_config(input);
  const StirringParams params(flag_rational(kappa, "kappa"), window);
  out << "well_stirred: " << (is_well_stirred(c, params) ? "true" : "false") << '\n'
      << "xi: " << to_string(xi(c)) << '\n';
  return kOk;
}

int cmd_validate(const std::string& input, const std::string& steps_path, std::ostream& out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(steps_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(steps_path + ": " + e.what());
  }
  Rearrangement r{input.empty() ? rearrangement_from_json(j).initial : read_config(input),
                  steps_from_json(j)};
  const auto report = validate_rearrangement(r);
  out << "valid: " << (report.valid ? "true" : "false") << '\n'
      << "complete: " << (report.complete ? "true" : "false") << '\n'
      << "gamma_cells: " << report.gamma << '\n'
      << "gamma: " << to_string(normalized(report.gamma, r.initial.size())) << '\n';
  if (report.failing_step) {
    out << "failing_step: " << *report.failing_step << '\n';
  }
  return kOk;
}

struct MixArgs {
  std::size_t grid = 0;
  std::size_t stages = 8;
  std::string kappa = "3/10";
  std::vector<std::size_t> radii;
};

int cmd_mix(const MixArgs& a, std::ostream& out) {
  if (a.grid < 4 || a.grid % 2 != 0) {
    throw InputError("--grid must be an even integer >= 4");
  }
  std::vector<std::size_t> radii = a.radii;
  if (radii.empty()) {
    for (std::size_t r = 1; 2 * r < a.grid; ++r) {
      radii.push_back(r);
    }
  }
  const auto rows =
      torus::mixing_experiment(a.grid, a.stages, flag_rational(a.kappa, "kappa"), radii);
  out << "stage,steps,cost,scale_cells,scale\n";
  for (const auto& row : rows) {
    out << row.stage << ',' << row.steps << ',' << to_decimal(row.cost) << ',';
    if (row.scale_cells) {
      out << *row.scale_cells << ','
          << to_decimal(Rational(BigInt(*row.scale_cells), BigInt(a.grid)));
    } else {
      out << ',';
    }
    out << '\n';
  }
  return kOk;
}

struct FlowArgs {
  std::string mask;
  std::size_t band = 0;
  std::string program;
  std::size_t cat_stages = 0;
  bool summary = false;
};

int cmd_flow(const FlowArgs& a, std::ostream& out) {
  if (a.mask.empty() == (a.band == 0)) {
    throw InputError("give exactly one of --mask or --band");
  }
  if (a.program.empty() == (a.cat_stages == 0)) {
    throw InputError("give exactly one of --program or --cat-stages");
  }
  const torus::GridMask initial =
      a.mask.empty() ? torus::make_band_set(a.band) : parse_mask(read_file(a.mask));
  torus::FlowProgram program = a.program.empty()
                                   ? torus::cat_program(a.cat_stages, initial.side())
                                   : parse_program(read_file(a.program));
  if (program.steps.empty()) {
    program.m = initial.side();
  }
  const auto final_mask = torus::run_program(initial, program);
  if (a.summary) {
    out << "side: " << final_mask.side() << '\n'
        << "mass: " << final_mask.mass() << '\n'
        << "steps: " << program.steps.size() << '\n'
        << "cost: " << to_string(torus::program_cost(program)) << '\n'
        << "measure_preserving: "
        << (torus::verify_measure_preserving(program) ? "true" : "false") << '\n';
  } else {
    out << format_mask(final_mask);
  }
  return kOk;
}

}  // namespace

std::vector<ScalingRow> scaling_rows(const Rational& kappa, std::size_t k_min, std::size_t k_max,
                                     std::size_t exact_cap) {
  if (k_min < 2 || k_min > k_max || k_max > 30) {
    throw std::invalid_argument("need 2 <= k-min <= k-max <= 30");
  }
  if (kappa <= 0 || kappa * 2 >= 1) {
    throw std::invalid_argument(
        "kappa must lie in (0, 1/2) for the alternating family to be well stirred");
  }
  auto make_row = [&kappa, exact_cap](std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    const Configuration c = gen_alternating(n, 2);
    ScalingRow row;
    row.eps = Rational(2, BigInt(n));
    row.n = n;
    row.kappa = kappa;
    const auto merge = merge_heuristic(c);
    const auto report = validate_rearrangement(merge);
    if (!report.complete) {
      throw std::logic_error("merge heuristic produced an incomplete rearrangement");
    }
    row.heur_cost = normalized(report.gamma, n);
    if (n <= exact_cap && n <= kMaxSearchCells) {
      auto exact = exact_min_cost(c, TargetPredicate::sorted(), {.max_cells = kMaxSearchCells});
      row.exact_cost = normalized(exact->cost, n);
    }
    row.n_eps = n_of_eps(kappa, row.eps);
    row.lower_bound = lemma_lower_bound(kappa, row.eps);
    const Rational& middle = row.exact_cost ? *row.exact_cost : row.heur_cost;
    if (row.lower_bound > middle || middle > row.heur_cost) {
      throw std::logic_error("scaling row at N = " + std::to_string(n) +
                             " breaks lower_bound <= exact <= heuristic");
    }
    return row;
  };

  std::vector<std::future<ScalingRow>> pending;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    pending.push_back(std::async(std::launch::async, make_row, k));
  }
  std::vector<ScalingRow> rows;
  for (auto& f : pending) {
    rows.push_back(f.get());
  }
  return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows, bool rational) {
  std::ostringstream out;
  out << "eps,N,kappa,heur_cost,exact_cost,lower_bound,n_eps\n";
  for (const auto& row : rows) {
    out << csv_number(row.eps, rational) << ',' << row.n << ',' << csv_number(row.kappa, rational)
        << ',' << csv_number(row.heur_cost, rational) << ','
        << (row.exact_cost ? csv_number(*row.exact_cost, rational) : std::string()) << ','
        << csv_number(row.lower_bound, rational) << ',' << row.n_eps << '\n';
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-transposition rearrangement costs and torus mixing experiments", "rearr"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a configuration line");
  gen_cmd->add_option("--n", gen.n, "Number of cells")->required();
  gen_cmd->add_option("--pattern", gen.pattern)->check(CLI::IsMember({"alternating", "random"}));
  gen_cmd->add_option("--period", gen.period, "Alternating period (even, divides n)");
  gen_cmd->add_option("--kappa", gen.kappa, "Stirring constant p/q (random)");
  gen_cmd->add_option("--window", gen.window, "Stirring window in cells (random)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--max-tries", gen.max_tries);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum-cost rearrangement of a configuration");
  solve_cmd->add_option("--input", solve.input, "Configuration file")->required();
  solve_cmd->add_option("--target", solve.target, "sorted | run:COLOR:S");
  solve_cmd->add_option("--method", solve.method)
      ->check(CLI::IsMember({"exact", "merge", "bubble"}));
  solve_cmd->add_option("--limit", solve.limit, "Settled-state budget");
  solve_cmd->add_option("--cap", solve.cap, "Largest N searched exactly");

  std::string bound_kappa, bound_eps;
  auto* bound_cmd = app.add_subcommand("bound", "Logarithmic lower-bound certificate");
  bound_cmd->add_option("--kappa", bound_kappa)->required();
  bound_cmd->add_option("--eps", bound_eps)->required();

  std::string scaling_kappa;
  std::size_t k_min = 2, k_max = 10, exact_cap = 16;
  bool scaling_rational = false;
  auto* scaling_cmd = app.add_subcommand("scaling", "Cost vs. scale on alternating inputs");
  scaling_cmd->add_option("--kappa", scaling_kappa)->required();
  scaling_cmd->add_option("--k-min", k_min);
  scaling_cmd->add_option("--k-max", k_max);
  scaling_cmd->add_option("--exact-cap", exact_cap);
  scaling_cmd->add_flag("--rational", scaling_rational, "Print p/q instead of decimals");

  MixArgs mix;
  auto* mix_cmd = app.add_subcommand("mix", "Shear-flow mixing of the half band on the torus");
  mix_cmd->add_option("--grid", mix.grid, "Grid side M (even)")->required();
  mix_cmd->add_option("--stages", mix.stages);
  mix_cmd->add_option("--kappa", mix.kappa);
  mix_cmd->add_option("--radii", mix.radii, "Ball radii in cells")->delimiter(',');

  FlowArgs flow;
  auto* flow_cmd = app.add_subcommand("flow", "Run a shear program on a mask");
  flow_cmd->add_option("--mask", flow.mask, "Mask file");
  flow_cmd->add_option("--band", flow.band, "Start from the half band on an MxM grid");
  flow_cmd->add_option("--program", flow.program, "Program file");
  flow_cmd->add_option("--cat-stages", flow.cat_stages);
  flow_cmd->add_flag("--summary", flow.summary);

  std::string check_input, check_kappa;
  std::size_t check_window = 0;
  auto* check_cmd = app.add_subcommand("check", "Test the well-stirred condition");
  check_cmd->add_option("--input", check_input)->required();
  check_cmd->add_option("--kappa", check_kappa)->required();
  check_cmd->add_option("--window", check_window)->required();

  std::string validate_input, validate_steps;
  auto* validate_cmd = app.add_subcommand("validate", "Replay and score a rearrangement");
  validate_cmd->add_option("--input", validate_input, "Configuration file");
  validate_cmd->add_option("--steps", validate_steps, "Step list or rearrangement record")
      ->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) {
    argv_rev.pop_back();
  }
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (bound_cmd->parsed()) return cmd_bound(bound_kappa, bound_eps, out);
    if (scaling_cmd->parsed()) {
      out << scaling_csv(scaling_rows(flag_rational(scaling_kappa, "kappa"), k_min, k_max,
                                      exact_cap),
                         scaling_rational);
      return kOk;
    }
    if (mix_cmd->parsed()) return cmd_mix(mix, out);
    if (flow_cmd->parsed()) return cmd_flow(flow, out);
    if (check_cmd->parsed()) return cmd_check(check_input, check_kappa, check_window, out);
    if (validate_cmd->parsed()) return cmd_validate(validate_input, validate_steps, out);
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const SolveError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::logic_error& e) {
    // std::invalid_argument lands here too.
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace rearr::cli
