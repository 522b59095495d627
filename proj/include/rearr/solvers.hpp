#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rearr/config.hpp"
#include "rearr/moves.hpp"

namespace rearr {

/// Goal of a search: the sorted configuration, or a run of `s` cells of one
/// colour somewhere in the configuration.
struct TargetPredicate {
  enum class Kind { Sorted, Run };

  Kind kind = Kind::Sorted;
  Cell color = 0;
  std::size_t s = 0;

  static TargetPredicate sorted() { return {}; }
  static TargetPredicate run(Cell color, std::size_t s);

  bool satisfied_by(const Configuration& c) const;
};

struct SolveOptions {
  /// Settled-state budget for exact_min_cost.
  std::uint64_t state_limit = std::uint64_t{1} << 22;
  /// Largest N accepted; never above kMaxSearchCells.
  std::size_t max_cells = 20;
};

inline constexpr std::size_t kMaxSearchCells = 24;
inline constexpr std::size_t kMaxOracleCells = 10;

class SolveError : public std::runtime_error {
 public:
  enum class Kind { StateLimit, TooLarge };

  SolveError(Kind kind, const std::string& what, std::uint64_t frontier = 0)
      : std::runtime_error(what), kind_(kind), frontier_(frontier) {}
  Kind kind() const noexcept { return kind_; }
  /// Open-list size when the state limit was hit.
  std::uint64_t frontier() const noexcept { return frontier_; }

 private:
  Kind kind_;
  std::uint64_t frontier_;
};

struct SolveResult {
  std::uint64_t cost = 0;  // cells
  Rearrangement witness;
  std::uint64_t explored = 0;  // settled states
};

/// Minimum total cost over all move sequences from `c` to a state meeting
/// `target`: least-cost-first search over bit patterns with edge weight
/// a + b. Equal-cost entries pop in lexicographic state order, and a state's
/// predecessor is the lexicographically smallest (state, move) pair among
/// those reaching it at its final cost, so witnesses are deterministic.
/// Returns nullopt when no reachable state meets the target (too few cells of
/// the requested colour). Throws SolveError on N above the cap or when the
/// state limit is exceeded.
std::optional<SolveResult> exact_min_cost(const Configuration& c, const TargetPredicate& target,
                                          const SolveOptions& options = {});

/// Independent oracle: Bellman value iteration of cost-to-target over all
/// 2^N bit patterns until a fixpoint. nullopt means unreachable. N <= 10.
std::optional<std::uint64_t> brute_force_min_cost(const Configuration& c,
                                                  const TargetPredicate& target);

/// V(s): the least cost to create a run of at least s cells of `color`.
std::optional<std::uint64_t> empirical_V(const Configuration& c, std::size_t s, Cell color,
                                         const SolveOptions& options = {});

/// Divide and conquer: sort each half, then at most one move swapping the
/// left half's trailing ones with the right half's leading zeros. Every
/// recursion level costs at most N cells, so the normalized total is at most
/// log2 N. Requires N to be a power of two.
Rearrangement merge_heuristic(const Configuration& c);

/// Repeats the leftmost full-run swap until sorted.
Rearrangement bubble_heuristic(const Configuration& c);

}  // namespace rearr
