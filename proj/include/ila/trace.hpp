#ifndef ILA_TRACE_HPP
#define ILA_TRACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ila/automaton.hpp"

namespace ila {

/// One step of a recurrent network run: input letter, hidden vector after
/// reading it, and the binary output.
struct TraceStep {
  std::vector<double> x;
  std::vector<double> h;
  bool y = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  std::vector<TraceStep> steps;
  /// Hidden vector and output before the first letter, when recorded.
  std::optional<std::vector<double>> h0;
  std::optional<bool> y0;

  Word word() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// A trace file: optional header fields plus the traces themselves.
struct TraceSet {
  std::optional<std::size_t> dim;
  std::optional<std::size_t> hidden_dim;
  std::optional<bool> y0_default;
  std::vector<Trace> traces;

  friend bool operator==(const TraceSet&, const TraceSet&) = default;
};

struct TraceDims {
  std::size_t input = 0;
  std::size_t hidden = 0;
};

/// Checks that all vectors are finite and of uniform size, consistent with
/// the header when it names dimensions. Returns the dimensions found
/// (0 when nothing determines them).
TraceDims validate(const TraceSet& set);

/// Output of the empty prefix for trace i: its own y0, else the header
/// default, else 0.
bool resolved_y0(const TraceSet& set, std::size_t i);

} // namespace ila

#endif
