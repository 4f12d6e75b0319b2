#ifndef ILA_ELMAN_HPP
#define ILA_ELMAN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ila/automaton.hpp"
#include "ila/trace.hpp"

namespace ila {

/// Single-layer Elman cell with a logistic read-out:
///   h' = tanh(Wx x + Wh h + b),  y = [wo . h + c > 0].
/// Matrices are row-major; Wx is m x d and Wh is m x m.
struct ElmanWeights {
  std::size_t input_dim = 0;  // d
  std::size_t hidden_dim = 0; // m
  std::vector<double> wx;
  std::vector<double> wh;
  std::vector<double> b;
  std::vector<double> wo;
  double c = 0.0;

  /// Throws DimensionMismatch or InvalidValue on inconsistent weights.
  void validate() const;

  static ElmanWeights zeros(std::size_t d, std::size_t m);
};

std::vector<double> elman_step(const ElmanWeights& w, std::span<const double> x,
                               std::span<const double> h);

/// 1 iff the logit is strictly positive (logistic output above 0.5).
bool classify(const ElmanWeights& w, std::span<const double> h);

/// Runs the network from the zero hidden state, recording h0/y0 and one
/// step per letter.
Trace run_rnn(const ElmanWeights& w, const Word& word);

} // namespace ila

#endif
