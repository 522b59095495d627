#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rearr/rational.hpp"

namespace rearr {

/// Cell colour. 1 is a black book (f = 1), 0 a white one.
using Cell = std::uint8_t;

/// Raised by parse_config; `position` is the 0-based offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when the rejection sampler gives up.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::uint64_t tries)
      : std::runtime_error(what), tries_(tries) {}
  std::uint64_t tries() const noexcept { return tries_; }

 private:
  std::uint64_t tries_;
};

/// A maximal constant run of cells.
struct Run {
  Cell color;
  std::size_t start;
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A binary step function on [0,1] sampled on N equal cells.
/// Cell i covers [i/N, (i+1)/N).
class Configuration {
 public:
  /// Throws std::invalid_argument on an empty vector or a value outside {0,1}.
  explicit Configuration(std::vector<Cell> cells);

  std::size_t size() const noexcept { return cells_.size(); }
  Cell operator[](std::size_t i) const { return cells_[i]; }
  std::span<const Cell> cells() const noexcept { return cells_; }

  std::size_t count_ones() const noexcept;

  /// Maximal runs, left to right. Colours alternate and lengths sum to N.
  std::vector<Run> runs() const;

  /// The '0'/'1' line encoding.
  std::string str() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Well-stirred parameters: kappa in (0,1) and a window of `window` cells,
/// so that the scale is eps = window / N.
struct StirringParams {
  StirringParams(Rational kappa, std::size_t window);

  Rational kappa;
  std::size_t window;
};

/// Reads one line of '0'/'1'. A single trailing "\n" (or "\r\n") is allowed.
Configuration parse_config(std::string_view text);

/// Black mass: (number of ones) / N.
Rational xi(const Configuration& c);

bool is_sorted(const Configuration& c);

/// Same N and mass with zeros on the left and ones on the right.
Configuration sorted_target(const Configuration& c);

/// True iff every cell-aligned window of p.window cells holds a black count m
/// with kappa * w < m <= (1 - kappa) * w. Checking aligned offsets suffices:
/// the window integral is piecewise linear in its left end with kinks only at
/// cell boundaries. Throws std::invalid_argument if the window exceeds N.
bool is_well_stirred(const Configuration& c, const StirringParams& p);

/// Repeats `period/2` ones then `period/2` zeros. Requires an even period
/// dividing n.
Configuration gen_alternating(std::size_t n, std::size_t period);

/// Rejection sampler: draws uniform bit strings from a seeded mt19937_64
/// until one is well stirred. Throws GenerationError after max_tries draws.
Configuration gen_random_stirred(std::size_t n, const StirringParams& p,
                                 std::uint64_t seed, std::uint64_t max_tries);

/// Longest maximal run of `color`, in cells (0 when the colour is absent).
std::size_t longest_run(const Configuration& c, Cell color);

}  // namespace rearr
