#ifndef ILA_IPTA_HPP
#define ILA_IPTA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ila/automaton.hpp"
#include "ila/error.hpp"
#include "ila/trace.hpp"

namespace ila {

/// Two trace prefixes with the same sequence of partition classes but
/// different outputs. `length` is the prefix length (0 for the empty
/// prefix). Trace indices refer to the trace set; `first_trace` is unset
/// when the conflict was found without knowing which trace set the state.
struct CoherenceConflict {
  std::optional<std::size_t> first_trace;
  std::size_t second_trace = 0;
  std::size_t length = 0;
  bool first_y = false;
  bool second_y = false;
  std::vector<std::size_t> classes;
};

class CoherenceError : public Error {
public:
  explicit CoherenceError(CoherenceConflict c);
  const CoherenceConflict& conflict() const noexcept { return conflict_; }

private:
  CoherenceConflict conflict_;
};

/// Human-readable report naming both offending prefixes.
std::string describe(const CoherenceConflict& c, const TraceSet& set);

/// Finds the first pair of prefixes sharing a class sequence but not an
/// output, scanning traces in order.
std::optional<CoherenceConflict> check_coherence(const TraceSet& set, const Partition& p);

/// Extends a prefix-tree automaton with one trace, starting from its unique
/// initial state. Labels and Gamma grow by join; a visited state becomes
/// final on y = 1. Throws CoherenceError when a state's output disagrees
/// with the step's output.
void add_sequence(LatticeAutomaton& a, const Trace& s);

/// Prefix-tree automaton of a whole trace set.
LatticeAutomaton build_ipta(const TraceSet& set, const Partition& p);

} // namespace ila

#endif
