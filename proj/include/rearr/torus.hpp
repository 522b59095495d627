#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rearr/rational.hpp"

namespace rearr::torus {

/// Indicator of a set on the M x M torus grid. Row j is the strip
/// x2 in [j/M, (j+1)/M); column i the strip x1 in [i/M, (i+1)/M).
class GridMask {
 public:
  /// All-zero mask. Throws std::invalid_argument for M == 0.
  explicit GridMask(std::size_t m);
  GridMask(std::size_t m, std::vector<std::uint8_t> cells);

  std::size_t side() const noexcept { return m_; }
  std::uint8_t at(std::size_t row, std::size_t col) const { return cells_[row * m_ + col]; }
  void set(std::size_t row, std::size_t col, std::uint8_t v) { cells_[row * m_ + col] = v; }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::size_t mass() const noexcept;

  friend bool operator==(const GridMask&, const GridMask&) = default;

 private:
  std::size_t m_;
  std::vector<std::uint8_t> cells_;
};

enum class Axis { Horizontal, Vertical };

/// One unit-time slab of a shear flow. Horizontal: row j moves by shifts[j]
/// cells along x1. Vertical: column i moves by shifts[i] cells along x2.
/// Translations are cyclic, so each step permutes the cells.
struct ShearStep {
  Axis axis = Axis::Horizontal;
  std::vector<std::int64_t> shifts;

  friend bool operator==(const ShearStep&, const ShearStep&) = default;
};

struct FlowProgram {
  std::size_t m = 0;
  std::vector<ShearStep> steps;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rows 0..M/2-1 filled: the lower half band x2 < 1/2. M must be even.
GridMask make_band_set(std::size_t m);

/// Cell-parity pattern (row + col) odd.
GridMask make_checkerboard(std::size_t m);

GridMask apply_step(const GridMask& mask, const ShearStep& step);
GridMask run_program(const GridMask& mask, const FlowProgram& program);

/// Reversed program with negated shifts.
FlowProgram inverse_program(const FlowProgram& program);

/// Smallest radius r among `radii` such that every cyclic sup-norm ball of
/// side 2r+1 centred on a cell has a filled fraction in [kappa, 1 - kappa].
/// Requires 0 < kappa < 1/2 and every radius in [1, M/2).
std::optional<std::size_t> mixing_scale(const GridMask& mask, const Rational& kappa,
                                        std::vector<std::size_t> radii);

/// Total variation of the shift profile across lines, cyclic, in length
/// units: sum_j |s(j+1) - s(j)| / M.
Rational step_cost(const ShearStep& step);
Rational program_cost(const FlowProgram& program);

/// Destination index (row * M + col) of every cell under one step.
std::vector<std::uint32_t> step_cell_map(const ShearStep& step, std::size_t m);

/// True iff `map` hits every index in [0, map.size()) exactly once.
bool is_cell_permutation(std::span<const std::uint32_t> map);

/// Re-checks each step's cell map for bijectivity. A bijective grid flow
/// preserves measure exactly (near-incompressibility with constant 1).
bool verify_measure_preserving(const FlowProgram& program);

/// Linear shear with shifts s(i) = 2i mod M along the given axis.
ShearStep linear_shear(Axis axis, std::size_t m);

/// k stages of [vertical linear shear, horizontal linear shear]. Requires
/// k >= 1 and M >= 4.
FlowProgram cat_program(std::size_t k, std::size_t m);

struct MixRow {
  std::size_t stage;
  std::size_t steps;
  Rational cost;
  std::optional<std::size_t> scale_cells;
  /// cost / log2(M / scale_cells) when mixed.
  std::optional<double> cost_per_log_scale;
};

/// Applies cat_program stages cumulatively to the band set and measures the
/// mixing scale after each stage (stage 0 is the unmixed band).
std::vector<MixRow> mixing_experiment(std::size_t m, std::size_t stages, const Rational& kappa,
                                      const std::vector<std::size_t>& radii);

}  // namespace rearr::torus
