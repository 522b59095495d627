#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rearr/config.hpp"

namespace rearr {

/// Swap of a black block [y, y+a) with the white block [y+a, y+a+b) that
/// follows it. Sub-blocks of longer runs are allowed. Units are cells.
struct Transposition {
  std::size_t y = 0;
  std::size_t a = 1;
  std::size_t b = 1;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(const std::string& what, std::size_t cell)
      : std::runtime_error(what), cell_(cell) {}
  /// First offending cell (N when the move runs past the right end).
  std::size_t cell() const noexcept { return cell_; }

 private:
  std::size_t cell_;
};

/// Cost a + b, in cells.
constexpr std::uint64_t cost(const Transposition& t) noexcept { return t.a + t.b; }

/// cells / N as an exact rational.
Rational normalized(std::uint64_t cells, std::size_t n);

bool is_legal(const Configuration& c, const Transposition& t);

/// Throws IllegalMove when !is_legal(c, t).
Configuration apply(const Configuration& c, const Transposition& t);

/// Every legal move, grouped by 1->0 boundary (left to right), then by a,
/// then by b.
std::vector<Transposition> legal_transpositions(const Configuration& c);

/// An initial configuration and the moves applied to it in order.
struct Rearrangement {
  Configuration initial;
  std::vector<Transposition> steps;
};

struct ValidationReport {
  bool valid = false;
  bool complete = false;
  /// Sum of a + b over the steps replayed before the first illegal one.
  std::uint64_t gamma = 0;
  std::optional<std::size_t> failing_step;
  /// State after the last legal step.
  Configuration final_state;
};

/// Total: never throws on bad steps, the first failure is reported instead.
ValidationReport validate_rearrangement(const Rearrangement& r);

}  // namespace rearr
