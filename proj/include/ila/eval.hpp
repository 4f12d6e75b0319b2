#ifndef ILA_EVAL_HPP
#define ILA_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ila/automaton.hpp"
#include "ila/tomita.hpp"

namespace ila {

using Oracle = std::function<bool(const Word&)>;

struct Disagreement {
  std::size_t index;
  bool oracle;
  bool automaton;
};

/// Agreement between a reference classifier and an automaton on a word
/// sample. Percentages are fractions of all words, so they sum to 100.
struct EvalReport {
  std::size_t n_words = 0;
  std::size_t agreements = 0;
  std::size_t type1 = 0; // rejected by the oracle, accepted by the automaton
  std::size_t type2 = 0; // accepted by the oracle, rejected by the automaton
  std::vector<Disagreement> disagreements; // filled only on request

  double fidelity_pct() const;
  double type1_pct() const;
  double type2_pct() const;
};

/// Runs both classifiers on every word. `jobs` > 1 splits the words over
/// worker threads; the oracle must then be safe to call concurrently.
EvalReport evaluate(const Oracle& oracle, const LatticeAutomaton& a, std::span<const Word> words,
                    std::size_t jobs = 1, bool detail = false);

struct WordSample {
  std::vector<Word> words;
  /// False when balancing was requested but the positive quota could not
  /// be met within the attempt budget.
  bool balanced = true;
};

/// i.i.d. words with lengths uniform in 1..max_len, letters drawn from the
/// language's letter distribution. With `balance`, up to a bounded number
/// of redraws per word are spent to reach at least 25% members.
WordSample sample_words(const LanguageId& id, std::size_t n, std::size_t max_len,
                        std::uint64_t seed, bool balance = false, LetterDistribution letters = {});

/// Same, for a d-dimensional alphabet with every component on the grid of
/// `letters` (used for network oracles that have no language).
std::vector<Word> sample_uniform_words(std::size_t dim, std::size_t n, std::size_t max_len,
                                       std::uint64_t seed, LetterDistribution letters = {});

} // namespace ila

#endif
