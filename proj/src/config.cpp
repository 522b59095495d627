#include "rearr/config.hpp"

#include <algorithm>
#include <random>

namespace rearr {

Configuration::Configuration(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw std::invalid_argument("configuration needs at least one cell");
  }
  for (Cell v : cells_) {
    if (v > 1) {
      throw std::invalid_argument("cell values must be 0 or 1");
    }
  }
}

std::size_t Configuration::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), Cell{1}));
}

std::vector<Run> Configuration::runs() const {
  std::vector<Run> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= cells_.size(); ++i) {
    if (i == cells_.size() || cells_[i] != cells_[start]) {
      out.push_back({cells_[start], start, i - start});
      start = i;
    }
  }
  return out;
}

std::string Configuration::str() const {
  std::string s;
  s.reserve(cells_.size());
  for (Cell v : cells_) {
    s.push_back(v ? '1' : '0');
  }
  return s;
}

StirringParams::StirringParams(Rational k, std::size_t w) : kappa(std::move(k)), window(w) {
  if (kappa <= 0 || kappa >= 1) {
    throw std::invalid_argument("kappa must lie strictly between 0 and 1");
  }
  if (window == 0) {
    throw std::invalid_argument("window must be at least one cell");
  }
}

Configuration parse_config(std::string_view text) {
  if (text.size() >= 1 && text.back() == '\n') {
    text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') {
      text.remove_suffix(1);
    }
  }
  if (text.empty()) {
    throw ParseError("empty configuration", 0);
  }
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw ParseError("illegal character at position " + std::to_string(i), i);
    }
    cells.push_back(static_cast<Cell>(ch - '0'));
  }
  return Configuration(std::move(cells));
}

Rational xi(const Configuration& c) {
  return Rational(BigInt(c.count_ones()), BigInt(c.size()));
}

bool is_sorted(const Configuration& c) {
  return std::is_sorted(c.cells().begin(), c.cells().end());
}

Configuration sorted_target(const Configuration& c) {
  std::vector<Cell> cells(c.size(), 0);
  std::fill(cells.end() - static_cast<std::ptrdiff_t>(c.count_ones()), cells.end(), Cell{1});
  return Configuration(std::move(cells));
}

namespace {

// Precomputed integer form of  p*w < q*m <= (q-p)*w  for each m in [0, w].
std::vector<bool> admissible_counts(const StirringParams& p) {
  const BigInt& num = boost::multiprecision::numerator(p.kappa);
  const BigInt& den = boost::multiprecision::denominator(p.kappa);
  const BigInt lower = num * p.window;
  const BigInt upper = (den - num) * p.window;
  std::vector<bool> ok(p.window + 1);
  for (std::size_t m = 0; m <= p.window; ++m) {
    BigInt scaled = den * m;
    ok[m] = lower < scaled && scaled <= upper;
  }
  return ok;
}

bool windows_admissible(std::span<const Cell> cells, std::size_t w, const std::vector<bool>& ok) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < w; ++i) {
    m += cells[i];
  }
  if (!ok[m]) {
    return false;
  }
  for (std::size_t k = 1; k + w <= cells.size(); ++k) {
    m = m + cells[k + w - 1] - cells[k - 1];
    if (!ok[m]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_well_stirred(const Configuration& c, const StirringParams& p) {
  if (p.window > c.size()) {
    throw std::invalid_argument("window of " + std::to_string(p.window) +
                                " cells exceeds N = " + std::to_string(c.size()));
  }
  return windows_admissible(c.cells(), p.window, admissible_counts(p));
}

Configuration gen_alternating(std::size_t n, std::size_t period) {
  if (n == 0 || period == 0 || period % 2 != 0 || n % period != 0) {
    throw std::invalid_argument("period must be a positive even divisor of n");
  }
  std::vector<Cell> cells(n);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i] = (i % period) < period / 2 ? 1 : 0;
  }
  return Configuration(std::move(cells));
}

Configuration gen_random_stirred(std::size_t n, const StirringParams& p, std::uint64_t seed,
                                 std::uint64_t max_tries) {
  if (n == 0) {
    throw std::invalid_argument("n must be positive");
  }
  if (p.window > n) {
    throw std::invalid_argument("window exceeds n");
  }
  const auto ok = admissible_counts(p);
  std::mt19937_64 rng(seed);
  std::vector<Cell> cells(n);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) {
        word = rng();
      }
      cells[i] = static_cast<Cell>((word >> (i % 64)) & 1u);
    }
    if (windows_admissible(cells, p.window, ok)) {
      return Configuration(cells);
    }
  }
  throw GenerationError("no well-stirred configuration found after " +
                            std::to_string(max_tries) + " tries",
                        max_tries);
}

std::size_t longest_run(const Configuration& c, Cell color) {
  std::size_t best = 0;
  for (const Run& r : c.runs()) {
    if (r.color == color) {
      best = std::max(best, r.length);
    }
  }
  return best;
}

}  // namespace rearr
