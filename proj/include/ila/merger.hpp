#ifndef ILA_MERGER_HPP
#define ILA_MERGER_HPP

#include <cstddef>
#include <optional>

#include "ila/automaton.hpp"

namespace ila {

struct MergeConfig {
  /// Pairs scoring strictly below this value are merged.
  double threshold = 0.0;
  std::optional<std::size_t> max_merges;
};

/// Distance in [0, 2] between two states: 2 when exactly one is final,
/// otherwise one minus the cosine of the midpoints of their Gamma boxes.
/// A state without a usable direction (Gamma bottom, unbounded, or with a
/// zero-norm midpoint) scores 0 against a state of the same kind and 2
/// against anything else.
double similarity_score(const LatticeAutomaton& a, StateId qi, StateId qj);

/// Merges qj into qi: transitions into or out of qj are redirected to qi
/// through add_transition, Gamma(qi) absorbs Gamma(qj), qi inherits
/// initial/final membership, and qj is deleted.
void merge_states(LatticeAutomaton& a, StateId qi, StateId qj);

/// Greedy merging. Each round merges the pair with the globally smallest
/// score, ties going to the lexicographically smallest (min id, max id);
/// the smaller id survives. Stops when no pair scores below the threshold
/// or max_merges is reached. Returns the number of merges performed.
std::size_t merge_loop(LatticeAutomaton& a, const MergeConfig& cfg);

} // namespace ila

#endif
