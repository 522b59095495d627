#include "rearr/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

namespace rearr {

TargetPredicate TargetPredicate::run(Cell color, std::size_t s) {
  if (color > 1) {
    throw std::invalid_argument("run colour must be 0 or 1");
  }
  if (s == 0) {
    throw std::invalid_argument("run length must be at least one cell");
  }
  return {Kind::Run, color, s};
}

bool TargetPredicate::satisfied_by(const Configuration& c) const {
  if (kind == Kind::Sorted) {
    return is_sorted(c);
  }
  return longest_run(c, color) >= s;
}

namespace {

// Search states: cell i is bit (N-1-i), so integer order on states equals
// lexicographic order on the bit strings.
using State = std::uint32_t;

struct Grid {
  std::size_t n;
  State full;

  State bit(std::size_t cell) const { return State{1} << (n - 1 - cell); }
  // Bits of cells [lo, hi).
  State span(std::size_t lo, std::size_t hi) const {
    if (hi <= lo) {
      return 0;
    }
    return ((State{1} << (hi - lo)) - 1) << (n - hi);
  }

  State encode(const Configuration& c) const {
    State s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i]) {
        s |= bit(i);
      }
    }
    return s;
  }

  Configuration decode(State s) const {
    std::vector<Cell> cells(n);
    for (std::size_t i = 0; i < n; ++i) {
      cells[i] = (s & bit(i)) ? 1 : 0;
    }
    return Configuration(std::move(cells));
  }
};

std::size_t longest_ones(State x) {
  std::size_t len = 0;
  while (x) {
    x &= x << 1;
    ++len;
  }
  return len;
}

bool state_meets(const Grid& g, State s, const TargetPredicate& target) {
  if (target.kind == TargetPredicate::Kind::Sorted) {
    const auto ones = static_cast<unsigned>(std::popcount(s));
    return s == ((State{1} << ones) - 1);
  }
  const State runs = target.color == 1 ? s : (~s & g.full);
  return longest_ones(runs) >= target.s;
}

struct PackedMove {
  std::uint8_t y = 0, a = 0, b = 0;

  Transposition unpack() const { return {y, a, b}; }
  friend auto operator<=>(const PackedMove&, const PackedMove&) = default;
};

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::optional<SolveResult> exact_min_cost(const Configuration& c, const TargetPredicate& target,
                                          const SolveOptions& options) {
  const std::size_t n = c.size();
  const std::size_t cap = std::min(options.max_cells, kMaxSearchCells);
  if (n > cap) {
    throw SolveError(SolveError::Kind::TooLarge,
                     "N = " + std::to_string(n) + " exceeds the search cap of " +
                         std::to_string(cap) + " cells");
  }
  if (target.kind == TargetPredicate::Kind::Run && target.s > n) {
    throw std::invalid_argument("run target longer than the configuration");
  }

  const Grid g{n, static_cast<State>((std::uint64_t{1} << n) - 1)};
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint32_t> dist(states, kUnreached);
  std::vector<State> pred(states, 0);
  std::vector<PackedMove> pred_move(states);
  std::vector<bool> settled(states, false);

  using Entry = std::pair<std::uint32_t, State>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  const State start = g.encode(c);
  dist[start] = 0;
  open.push({0, start});

  std::array<Cell, kMaxSearchCells> cells{};
  std::uint64_t explored = 0;

  while (!open.empty()) {
    auto [d, u] = open.top();
    open.pop();
    if (settled[u] || d != dist[u]) {
      continue;
    }
    settled[u] = true;
    ++explored;

    if (state_meets(g, u, target)) {
      std::vector<Transposition> steps;
      for (State v = u; v != start; v = pred[v]) {
        steps.push_back(pred_move[v].unpack());
      }
      std::reverse(steps.begin(), steps.end());
      return SolveResult{d, Rearrangement{c, std::move(steps)}, explored};
    }
    if (explored > options.state_limit) {
      throw SolveError(SolveError::Kind::StateLimit,
                       "state limit of " + std::to_string(options.state_limit) +
                           " exceeded with " + std::to_string(open.size()) + " open states",
                       open.size());
    }

    for (std::size_t i = 0; i < n; ++i) {
      cells[i] = (u & g.bit(i)) ? 1 : 0;
    }
    // Walk each 1-run followed by a 0-run.
    std::size_t i = 0;
    while (i < n) {
      if (cells[i] == 0) {
        ++i;
        continue;
      }
      std::size_t ones_end = i;
      while (ones_end < n && cells[ones_end] == 1) {
        ++ones_end;
      }
      std::size_t zeros_end = ones_end;
      while (zeros_end < n && cells[zeros_end] == 0) {
        ++zeros_end;
      }
      const std::size_t left = ones_end - i;
      const std::size_t right = zeros_end - ones_end;
      for (std::size_t a = 1; a <= left; ++a) {
        const std::size_t y = ones_end - a;
        for (std::size_t b = 1; b <= right; ++b) {
          const State v = (u & ~g.span(y, y + a + b)) | g.span(y + b, y + a + b);
          if (settled[v]) {
            continue;
          }
          const auto nd = static_cast<std::uint32_t>(d + a + b);
          const PackedMove mv{static_cast<std::uint8_t>(y), static_cast<std::uint8_t>(a),
                              static_cast<std::uint8_t>(b)};
          if (nd < dist[v]) {
            dist[v] = nd;
            pred[v] = u;
            pred_move[v] = mv;
            open.push({nd, v});
          } else if (nd == dist[v] && std::tie(u, mv) < std::tie(pred[v], pred_move[v])) {
            pred[v] = u;
            pred_move[v] = mv;
          }
        }
      }
      i = zeros_end;
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> brute_force_min_cost(const Configuration& c,
                                                  const TargetPredicate& target) {
  const std::size_t n = c.size();
  if (n > kMaxOracleCells) {
    throw SolveError(SolveError::Kind::TooLarge,
                     "oracle limited to N <= " + std::to_string(kMaxOracleCells));
  }
  // Plain encoding here: cell i is bit i.
  const std::size_t states = std::size_t{1} << n;
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

  auto cell = [](std::size_t mask, std::size_t i) { return (mask >> i) & 1u; };
  auto goal = [&](std::size_t mask) {
    if (target.kind == TargetPredicate::Kind::Sorted) {
      for (std::size_t i = 1; i < n; ++i) {
        if (cell(mask, i - 1) > cell(mask, i)) {
          return false;
        }
      }
      return true;
    }
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
      run = cell(mask, i) == target.color ? run + 1 : 0;
      if (run >= target.s) {
        return true;
      }
    }
    return false;
  };

  std::vector<std::uint64_t> value(states, kInf);
  for (std::size_t m = 0; m < states; ++m) {
    if (goal(m)) {
      value[m] = 0;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t m = 0; m < states; ++m) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t a = 1; y + a < n; ++a) {
          for (std::size_t b = 1; y + a + b <= n; ++b) {
            bool legal = true;
            for (std::size_t i = y; i < y + a + b && legal; ++i) {
              legal = cell(m, i) == (i < y + a ? 1u : 0u);
            }
            if (!legal) {
              continue;
            }
            std::size_t next = m;
            for (std::size_t i = y; i < y + a + b; ++i) {
              next &= ~(std::size_t{1} << i);
              if (i >= y + b) {
                next |= std::size_t{1} << i;
              }
            }
            if (value[next] != kInf && value[next] + a + b < value[m]) {
              value[m] = value[next] + a + b;
              changed = true;
            }
          }
        }
      }
    }
  }

  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i]) {
      start |= std::size_t{1} << i;
    }
  }
  if (value[start] == kInf) {
    return std::nullopt;
  }
  return value[start];
}

std::optional<std::uint64_t> empirical_V(const Configuration& c, std::size_t s, Cell color,
                                         const SolveOptions& options) {
  if (s == 0 || s > c.size()) {
    throw std::invalid_argument("run length must lie in [1, N]");
  }
  auto result = exact_min_cost(c, TargetPredicate::run(color, s), options);
  if (!result) {
    return std::nullopt;
  }
  return result->cost;
}

namespace {

void merge_sort_moves(std::vector<Cell>& cells, std::size_t lo, std::size_t hi,
                      std::vector<Transposition>& steps) {
  if (hi - lo < 2) {
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort_moves(cells, lo, mid, steps);
  merge_sort_moves(cells, mid, hi, steps);
  // Both halves are now 0^p 1^q; swap the left ones with the right zeros.
  const auto first = cells.begin();
  const auto ones = static_cast<std::size_t>(std::count(first + lo, first + mid, Cell{1}));
  const auto zeros = static_cast<std::size_t>(std::count(first + mid, first + hi, Cell{0}));
  if (ones == 0 || zeros == 0) {
    return;
  }
  const Transposition t{mid - ones, ones, zeros};
  std::fill_n(first + t.y, t.b, Cell{0});
  std::fill_n(first + t.y + t.b, t.a, Cell{1});
  steps.push_back(t);
}

}  // namespace

Rearrangement merge_heuristic(const Configuration& c) {
  const std::size_t n = c.size();
  if ((n & (n - 1)) != 0) {
    throw std::invalid_argument("merge heuristic needs N to be a power of two, got " +
                                std::to_string(n));
  }
  std::vector<Cell> cells(c.cells().begin(), c.cells().end());
  std::vector<Transposition> steps;
  merge_sort_moves(cells, 0, n, steps);
  return {c, std::move(steps)};
}

Rearrangement bubble_heuristic(const Configuration& c) {
  Configuration current = c;
  std::vector<Transposition> steps;
  while (true) {
    const auto runs = current.runs();
    auto it = std::adjacent_find(runs.begin(), runs.end(), [](const Run& l, const Run& r) {
      return l.color == 1 && r.color == 0;
    });
    if (it == runs.end()) {
      break;
    }
    const Transposition t{it->start, it->length, std::next(it)->length};
    current = apply(current, t);
    steps.push_back(t);
  }
  return {c, std::move(steps)};
}

}  // namespace rearr
