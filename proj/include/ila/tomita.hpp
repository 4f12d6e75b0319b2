#ifndef ILA_TOMITA_HPP
#define ILA_TOMITA_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ila/automaton.hpp"
#include "ila/lattice.hpp"
#include "ila/trace.hpp"

namespace ila {

enum class Family { classic, tomita2 };

/// One of the seven classic Tomita languages over {0,1}, or one of their
/// seven real-valued analogs where a letter counts as 1 when it is >= 0.
struct LanguageId {
  Family family = Family::tomita2;
  int index = 1;

  LanguageId() = default;
  LanguageId(Family f, int i);

  /// Parses "tomita:K" or "tomita2:K" with K in 1..7.
  static LanguageId parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const LanguageId&, const LanguageId&) = default;
};

/// Minimal complete DFA over the two letter classes {0, 1}.
struct Dfa {
  std::size_t start = 0;
  std::vector<std::array<std::size_t, 2>> next;
  std::vector<bool> accepting;

  std::size_t size() const noexcept { return next.size(); }
  std::size_t run(std::span<const int> bits) const;
  bool accepts(std::span<const int> bits) const { return accepting[run(bits)]; }
};

/// Ground-truth automaton of Tomita language `index` (1..7).
const Dfa& tomita_dfa(int index);

bool tomita_member(int index, std::span<const int> bits);
bool tomita2_member(int index, std::span<const double> word);
/// Dispatches on the family. Classic letters are bits encoded as reals,
/// read as 1 when >= 0.5.
bool member(const LanguageId& id, const Word& word);

/// Letter class (0 or 1) of a one-dimensional letter under the language's
/// encoding.
int letter_bit(const LanguageId& id, double x);

/// Partition matching the language's letter classes: cut {0} for tomita2,
/// {0.5} for classic bits.
Partition default_partition(const LanguageId& id);

/// Letter distribution: tomita2 letters are uniform on the grid of step
/// 1/grid inside [-10, 10]; classic letters are 0.0 or 1.0 with equal odds.
/// Learned labels are hulls of observed letters, so on a fine grid a test
/// letter can fall just outside a rarely used transition; step 0.5 keeps
/// noiseless recovery exact.
struct LetterDistribution {
  std::int64_t grid = 2;
  double bound = 10.0;
};

class LetterSampler {
public:
  LetterSampler(const LanguageId& id, LetterDistribution dist = {});
  double operator()(std::mt19937_64& rng) const;

private:
  bool classic_;
  std::int64_t steps_;
  double grid_;
};

struct SynthConfig {
  std::size_t count = 1000;
  std::size_t max_len = 20;
  /// Standard deviation of the Gaussian noise added to each hidden component.
  double noise = 0.0;
  std::uint64_t seed = 0;
  LetterDistribution letters;
};

/// Oracle-labelled traces. Word lengths are uniform in 1..max_len; the
/// hidden vector after each prefix is the one-hot encoding of the
/// ground-truth DFA state plus noise, and y is the oracle's verdict on the
/// prefix. h0/y0 describe the DFA start state.
TraceSet gen_traces(const LanguageId& id, const SynthConfig& cfg);

} // namespace ila

#endif
