#include "rearr/moves.hpp"

#include <algorithm>

namespace rearr {

namespace {

// First cell violating the pattern 1^a 0^b at y, or nullopt if legal.
std::optional<std::size_t> first_offending_cell(const Configuration& c, const Transposition& t) {
  if (t.a == 0) {
    return t.y;
  }
  if (t.b == 0) {
    return t.y + t.a;
  }
  for (std::size_t i = t.y; i < t.y + t.a + t.b; ++i) {
    if (i >= c.size()) {
      return c.size();
    }
    Cell expected = i < t.y + t.a ? 1 : 0;
    if (c[i] != expected) {
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace

Rational normalized(std::uint64_t cells, std::size_t n) {
  return Rational(BigInt(cells), BigInt(n));
}

bool is_legal(const Configuration& c, const Transposition& t) {
  return !first_offending_cell(c, t).has_value();
}

Configuration apply(const Configuration& c, const Transposition& t) {
  if (auto bad = first_offending_cell(c, t)) {
    throw IllegalMove("transposition (" + std::to_string(t.y) + "," + std::to_string(t.a) + "," +
                          std::to_string(t.b) + ") illegal at cell " + std::to_string(*bad),
                      *bad);
  }
  std::vector<Cell> cells(c.cells().begin(), c.cells().end());
  std::fill_n(cells.begin() + static_cast<std::ptrdiff_t>(t.y), t.b, Cell{0});
  std::fill_n(cells.begin() + static_cast<std::ptrdiff_t>(t.y + t.b), t.a, Cell{1});
  return Configuration(std::move(cells));
}

std::vector<Transposition> legal_transpositions(const Configuration& c) {
  std::vector<Transposition> out;
  const auto runs = c.runs();
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    if (runs[k].color != 1) {
      continue;
    }
    const std::size_t boundary = runs[k + 1].start;
    for (std::size_t a = 1; a <= runs[k].length; ++a) {
      for (std::size_t b = 1; b <= runs[k + 1].length; ++b) {
        out.push_back({boundary - a, a, b});
      }
    }
  }
  return out;
}

ValidationReport validate_rearrangement(const Rearrangement& r) {
  ValidationReport report{.valid = true,
                          .complete = false,
                          .gamma = 0,
                          .failing_step = std::nullopt,
                          .final_state = r.initial};
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    if (!is_legal(report.final_state, r.steps[i])) {
      report.valid = false;
      report.failing_step = i;
      return report;
    }
    report.final_state = apply(report.final_state, r.steps[i]);
    report.gamma += cost(r.steps[i]);
  }
  report.complete = is_sorted(report.final_state);
  return report;
}

}  // namespace rearr
