#include "rearr/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rearr::torus {

namespace {

std::size_t wrap(std::int64_t v, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::size_t>(((v % mm) + mm) % mm);
}

void require_shape(const ShearStep& step, std::size_t m) {
  if (step.shifts.size() != m) {
    throw DimensionError("shear step has " + std::to_string(step.shifts.size()) +
                         " shifts on a grid of side " + std::to_string(m));
  }
}

}  // namespace

GridMask::GridMask(std::size_t m) : GridMask(m, std::vector<std::uint8_t>(m * m, 0)) {}

GridMask::GridMask(std::size_t m, std::vector<std::uint8_t> cells)
    : m_(m), cells_(std::move(cells)) {
  if (m_ == 0) {
    throw std::invalid_argument("grid side must be positive");
  }
  if (cells_.size() != m_ * m_) {
    throw DimensionError("mask needs M*M cells");
  }
  if (std::any_of(cells_.begin(), cells_.end(), [](std::uint8_t v) { return v > 1; })) {
    throw std::invalid_argument("mask cells must be 0 or 1");
  }
}

std::size_t GridMask::mass() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

GridMask make_band_set(std::size_t m) {
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("band set needs an even grid side, got " + std::to_string(m));
  }
  GridMask mask(m);
  for (std::size_t row = 0; row < m / 2; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      mask.set(row, col, 1);
    }
  }
  return mask;
}

GridMask make_checkerboard(std::size_t m) {
  GridMask mask(m);
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      mask.set(row, col, static_cast<std::uint8_t>((row + col) % 2));
    }
  }
  return mask;
}

std::vector<std::uint32_t> step_cell_map(const ShearStep& step, std::size_t m) {
  require_shape(step, m);
  std::vector<std::uint32_t> map(m * m);
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t to_row = row;
      std::size_t to_col = col;
      if (step.axis == Axis::Horizontal) {
        to_col = wrap(static_cast<std::int64_t>(col) + step.shifts[row], m);
      } else {
        to_row = wrap(static_cast<std::int64_t>(row) + step.shifts[col], m);
      }
      map[row * m + col] = static_cast<std::uint32_t>(to_row * m + to_col);
    }
  }
  return map;
}

bool is_cell_permutation(std::span<const std::uint32_t> map) {
  std::vector<bool> hit(map.size(), false);
  for (std::uint32_t to : map) {
    if (to >= map.size() || hit[to]) {
      return false;
    }
    hit[to] = true;
  }
  return true;
}

GridMask apply_step(const GridMask& mask, const ShearStep& step) {
  const std::size_t m = mask.side();
  const auto map = step_cell_map(step, m);
  std::vector<std::uint8_t> out(m * m, 0);
  const auto in = mask.cells();
  for (std::size_t k = 0; k < map.size(); ++k) {
    out[map[k]] = in[k];
  }
  return GridMask(m, std::move(out));
}

GridMask run_program(const GridMask& mask, const FlowProgram& program) {
  if (program.m != mask.side()) {
    throw DimensionError("program side " + std::to_string(program.m) + " does not match mask side " +
                         std::to_string(mask.side()));
  }
  GridMask current = mask;
  for (const ShearStep& step : program.steps) {
    current = apply_step(current, step);
  }
  return current;
}

FlowProgram inverse_program(const FlowProgram& program) {
  FlowProgram inv{program.m, {}};
  for (auto it = program.steps.rbegin(); it != program.steps.rend(); ++it) {
    ShearStep step = *it;
    for (auto& s : step.shifts) {
      s = -s;
    }
    inv.steps.push_back(std::move(step));
  }
  return inv;
}

namespace {

// Cyclic window sums of side 2r+1 centred on each cell: rows first, then columns.
std::vector<std::uint32_t> ball_counts(const GridMask& mask, std::size_t r) {
  const std::size_t m = mask.side();
  const std::size_t width = 2 * r + 1;
  std::vector<std::uint32_t> rows(m * m, 0);
  for (std::size_t row = 0; row < m; ++row) {
    std::uint32_t sum = 0;
    for (std::size_t d = 0; d < width; ++d) {
      sum += mask.at(row, (m - r + d) % m);
    }
    for (std::size_t col = 0; col < m; ++col) {
      rows[row * m + col] = sum;
      sum -= mask.at(row, (col + m - r) % m);
      sum += mask.at(row, (col + r + 1) % m);
    }
  }
  std::vector<std::uint32_t> out(m * m, 0);
  for (std::size_t col = 0; col < m; ++col) {
    std::uint32_t sum = 0;
    for (std::size_t d = 0; d < width; ++d) {
      sum += rows[((m - r + d) % m) * m + col];
    }
    for (std::size_t row = 0; row < m; ++row) {
      out[row * m + col] = sum;
      sum -= rows[((row + m - r) % m) * m + col];
      sum += rows[((row + r + 1) % m) * m + col];
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> mixing_scale(const GridMask& mask, const Rational& kappa,
                                        std::vector<std::size_t> radii) {
  if (kappa <= 0 || kappa * 2 >= 1) {
    throw std::invalid_argument("kappa must lie in (0, 1/2)");
  }
  const std::size_t m = mask.side();
  for (std::size_t r : radii) {
    if (r < 1 || 2 * r >= m) {
      throw std::invalid_argument("radius " + std::to_string(r) + " outside [1, M/2)");
    }
  }
  std::sort(radii.begin(), radii.end());
  const BigInt p = boost::multiprecision::numerator(kappa);
  const BigInt q = boost::multiprecision::denominator(kappa);

  for (std::size_t r : radii) {
    const std::size_t area = (2 * r + 1) * (2 * r + 1);
    // kappa <= count/area <= 1 - kappa, i.e. p*area <= q*count <= (q-p)*area.
    const BigInt lo_bound = p * area;
    const BigInt hi_bound = (q - p) * area;
    std::vector<bool> ok(area + 1);
    for (std::size_t count = 0; count <= area; ++count) {
      const BigInt scaled = q * count;
      ok[count] = lo_bound <= scaled && scaled <= hi_bound;
    }
    const auto counts = ball_counts(mask, r);
    if (std::all_of(counts.begin(), counts.end(), [&](std::uint32_t c) { return ok[c]; })) {
      return r;
    }
  }
  return std::nullopt;
}

Rational step_cost(const ShearStep& step) {
  const std::size_t m = step.shifts.size();
  if (m == 0) {
    return Rational(0);
  }
  BigInt total = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::int64_t diff = step.shifts[(j + 1) % m] - step.shifts[j];
    total += diff < 0 ? -diff : diff;
  }
  return Rational(total, BigInt(m));
}

Rational program_cost(const FlowProgram& program) {
  Rational total = 0;
  for (const ShearStep& step : program.steps) {
    total += step_cost(step);
  }
  return total;
}

bool verify_measure_preserving(const FlowProgram& program) {
  for (const ShearStep& step : program.steps) {
    if (step.shifts.size() != program.m) {
      return false;
    }
    if (!is_cell_permutation(step_cell_map(step, program.m))) {
      return false;
    }
  }
  return true;
}

ShearStep linear_shear(Axis axis, std::size_t m) {
  ShearStep step{axis, std::vector<std::int64_t>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    step.shifts[i] = static_cast<std::int64_t>((2 * i) % m);
  }
  return step;
}

FlowProgram cat_program(std::size_t k, std::size_t m) {
  if (k < 1) {
    throw std::invalid_argument("cat program needs at least one stage");
  }
  if (m < 4) {
    throw std::invalid_argument("cat program needs M >= 4");
  }
  FlowProgram program{m, {}};
  for (std::size_t stage = 0; stage < k; ++stage) {
    program.steps.push_back(linear_shear(Axis::Vertical, m));
    program.steps.push_back(linear_shear(Axis::Horizontal, m));
  }
  return program;
}

std::vector<MixRow> mixing_experiment(std::size_t m, std::size_t stages, const Rational& kappa,
                                      const std::vector<std::size_t>& radii) {
  GridMask mask = make_band_set(m);
  const FlowProgram one_stage = cat_program(1, m);
  const Rational stage_cost = program_cost(one_stage);

  std::vector<MixRow> rows;
  for (std::size_t stage = 0; stage <= stages; ++stage) {
    if (stage > 0) {
      mask = run_program(mask, one_stage);
    }
    MixRow row{stage, 2 * stage, stage_cost * stage, mixing_scale(mask, kappa, radii),
               std::nullopt};
    if (row.scale_cells) {
      const double log_scale =
          std::log2(static_cast<double>(m) / static_cast<double>(*row.scale_cells));
      row.cost_per_log_scale = row.cost.convert_to<double>() / log_scale;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rearr::torus
