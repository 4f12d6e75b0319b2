#include "ila/eval.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "ila/error.hpp"

namespace ila {

double EvalReport::fidelity_pct() const {
  return n_words == 0 ? 0.0 : 100.0 * static_cast<double>(agreements) / static_cast<double>(n_words);
}

double EvalReport::type1_pct() const {
  return n_words == 0 ? 0.0 : 100.0 * static_cast<double>(type1) / static_cast<double>(n_words);
}

double EvalReport::type2_pct() const {
  return n_words == 0 ? 0.0 : 100.0 * static_cast<double>(type2) / static_cast<double>(n_words);
}

EvalReport evaluate(const Oracle& oracle, const LatticeAutomaton& a, std::span<const Word> words,
                    std::size_t jobs, bool detail) {
  if (words.empty())
    throw InvalidValue("evaluation needs at least one word");
  for (const auto& w : words)
    for (const auto& letter : w)
      if (letter.size() != a.dim())
        throw DimensionMismatch("test letter of dimension " + std::to_string(letter.size()) +
                                " for an automaton of dimension " + std::to_string(a.dim()));

  // 0 = agree, 1 = type I, 2 = type II
  std::vector<std::uint8_t> verdict(words.size());
  std::vector<std::uint8_t> accepted(words.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const bool r = oracle(words[i]);
      const bool m = a.accepts(words[i]);
      accepted[i] = m;
      verdict[i] = r == m ? 0 : (m ? 1 : 2);
    }
  };

  jobs = std::clamp<std::size_t>(jobs, 1, words.size());
  if (jobs == 1) {
    work(0, words.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (words.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < words.size(); begin += chunk)
      pool.emplace_back(work, begin, std::min(words.size(), begin + chunk));
  }

  EvalReport r;
  r.n_words = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    switch (verdict[i]) {
    case 0:
      ++r.agreements;
      break;
    case 1:
      ++r.type1;
      break;
    default:
      ++r.type2;
      break;
    }
    if (detail && verdict[i] != 0)
      r.disagreements.push_back(Disagreement{i, !accepted[i], static_cast<bool>(accepted[i])});
  }
  return r;
}

namespace {

Word draw_word(std::mt19937_64& rng, const LetterSampler& letter, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    w.push_back({letter(rng)});
  return w;
}

constexpr std::size_t kBalanceAttempts = 1000;

} // namespace

WordSample sample_words(const LanguageId& id, std::size_t n, std::size_t max_len,
                        std::uint64_t seed, bool balance, LetterDistribution letters) {
  if (n < 1)
    throw InvalidValue("need at least one word");
  if (max_len < 1)
    throw InvalidValue("max_len must be >= 1");
  std::mt19937_64 rng(seed);
  const LetterSampler letter(id, letters);
  const std::size_t quota = (n + 3) / 4;

  WordSample out;
  out.words.reserve(n);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Word w = draw_word(rng, letter, max_len);
    // Redraw only while the remaining slots could not reach the quota.
    if (balance && positives < quota && n - i <= quota - positives) {
      std::size_t attempts = 1;
      while (!member(id, w) && attempts < kBalanceAttempts) {
        w = draw_word(rng, letter, max_len);
        ++attempts;
      }
      if (!member(id, w))
        out.balanced = false;
    }
    positives += member(id, w) ? 1 : 0;
    out.words.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> sample_uniform_words(std::size_t dim, std::size_t n, std::size_t max_len,
                                       std::uint64_t seed, LetterDistribution letters) {
  if (dim < 1 || max_len < 1)
    throw InvalidValue("dimension and max_len must be >= 1");
  std::mt19937_64 rng(seed);
  const LetterSampler component(LanguageId(Family::tomita2, 1), letters);
  std::vector<Word> words;
  words.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    Word w(len, Letter(dim));
    for (auto& l : w)
      for (double& v : l)
        v = component(rng);
    words.push_back(std::move(w));
  }
  return words;
}

} // namespace ila
