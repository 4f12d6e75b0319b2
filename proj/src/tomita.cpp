#include "ila/tomita.hpp"

#include <charconv>
#include <cmath>

#include "ila/error.hpp"

namespace ila {

LanguageId::LanguageId(Family f, int i) : family(f), index(i) {
  if (i < 1 || i > 7)
    throw InvalidValue("language index " + std::to_string(i) + " out of range 1..7");
}

LanguageId LanguageId::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidValue("language id must look like tomita:K or tomita2:K, got '" +
                       std::string(text) + "'");
  const auto name = text.substr(0, colon);
  const auto num = text.substr(colon + 1);
  Family f;
  if (name == "tomita")
    f = Family::classic;
  else if (name == "tomita2")
    f = Family::tomita2;
  else
    throw InvalidValue("unknown language family '" + std::string(name) + "'");
  int k = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
  if (ec != std::errc{} || ptr != num.data() + num.size())
    throw InvalidValue("bad language index '" + std::string(num) + "'");
  return LanguageId(f, k);
}

std::string LanguageId::str() const {
  return (family == Family::classic ? "tomita:" : "tomita2:") + std::to_string(index);
}

std::size_t Dfa::run(std::span<const int> bits) const {
  std::size_t q = start;
  for (int b : bits)
    q = next[q][b != 0 ? 1 : 0];
  return q;
}

namespace {

// Transitions are {on 0, on 1}.
const std::array<Dfa, 7>& all_dfas() {
  static const std::array<Dfa, 7> dfas = {
      // 1*
      Dfa{0, {{1, 0}, {1, 1}}, {true, false}},
      // (10)*
      Dfa{0, {{2, 1}, {0, 2}, {2, 2}}, {true, false, false}},
      // no odd run of 1s immediately followed by an odd run of 0s:
      // 0 neutral, 1 odd run of 1s, 2 odd 0s after odd 1s, 3 even 0s after
      // odd 1s, 4 dead
      Dfa{0, {{0, 1}, {2, 0}, {3, 4}, {2, 1}, {4, 4}}, {true, true, false, true, false}},
      // no 000: state counts trailing zeros
      Dfa{0, {{1, 0}, {2, 0}, {3, 0}, {3, 3}}, {true, true, true, false}},
      // even #0 and even #1: state = 2 * (#0 mod 2) + (#1 mod 2)
      Dfa{0, {{2, 1}, {3, 0}, {0, 3}, {1, 2}}, {true, false, false, false}},
      // (#1 - #0) mod 3 == 0
      Dfa{0, {{2, 1}, {0, 2}, {1, 0}}, {true, false, false}},
      // 0*1*0*1*
      Dfa{0, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 4}}, {true, true, true, true, false}},
  };
  return dfas;
}

std::vector<int> bits_of(const LanguageId& id, const Word& word) {
  std::vector<int> bits;
  bits.reserve(word.size());
  for (const auto& letter : word) {
    if (letter.size() != 1)
      throw DimensionMismatch("Tomita letters are one-dimensional");
    bits.push_back(letter_bit(id, letter[0]));
  }
  return bits;
}

} // namespace

const Dfa& tomita_dfa(int index) {
  if (index < 1 || index > 7)
    throw InvalidValue("language index " + std::to_string(index) + " out of range 1..7");
  return all_dfas()[static_cast<std::size_t>(index - 1)];
}

bool tomita_member(int index, std::span<const int> bits) {
  return tomita_dfa(index).accepts(bits);
}

bool tomita2_member(int index, std::span<const double> word) {
  const Dfa& dfa = tomita_dfa(index);
  std::size_t q = dfa.start;
  for (double x : word)
    q = dfa.next[q][x < 0.0 ? 0 : 1];
  return dfa.accepting[q];
}

int letter_bit(const LanguageId& id, double x) {
  if (std::isnan(x))
    throw InvalidValue("NaN letter");
  if (id.family == Family::classic)
    return x >= 0.5 ? 1 : 0;
  return x < 0.0 ? 0 : 1;
}

bool member(const LanguageId& id, const Word& word) {
  return tomita_dfa(id.index).accepts(bits_of(id, word));
}

Partition default_partition(const LanguageId& id) {
  return Partition::single_cut(id.family == Family::classic ? 0.5 : 0.0);
}

LetterSampler::LetterSampler(const LanguageId& id, LetterDistribution dist)
    : classic_(id.family == Family::classic),
      steps_(static_cast<std::int64_t>(std::llround(dist.bound * static_cast<double>(dist.grid)))),
      grid_(static_cast<double>(dist.grid)) {
  if (dist.grid < 1 || !(dist.bound > 0.0))
    throw InvalidValue("letter grid and bound must be positive");
}

double LetterSampler::operator()(std::mt19937_64& rng) const {
  if (classic_)
    return std::uniform_int_distribution<int>(0, 1)(rng) == 1 ? 1.0 : 0.0;
  const auto k = std::uniform_int_distribution<std::int64_t>(-steps_, steps_)(rng);
  return static_cast<double>(k) / grid_;
}

TraceSet gen_traces(const LanguageId& id, const SynthConfig& cfg) {
  if (cfg.max_len < 1)
    throw InvalidValue("max_len must be >= 1");
  if (!(cfg.noise >= 0.0))
    throw InvalidValue("noise must be >= 0");

  const Dfa& dfa = tomita_dfa(id.index);
  const std::size_t m = dfa.size();
  std::mt19937_64 rng(cfg.seed);
  const LetterSampler letter(id, cfg.letters);
  std::uniform_int_distribution<std::size_t> length(1, cfg.max_len);
  std::normal_distribution<double> noise(0.0, cfg.noise);

  const auto hidden = [&](std::size_t q) {
    std::vector<double> h(m, 0.0);
    h[q] = 1.0;
    if (cfg.noise > 0.0)
      for (double& v : h)
        v += noise(rng);
    return h;
  };

  TraceSet set;
  set.dim = 1;
  set.hidden_dim = m;
  set.y0_default = dfa.accepting[dfa.start];
  set.traces.reserve(cfg.count);
  std::vector<double> h0(m, 0.0);
  h0[dfa.start] = 1.0;
  for (std::size_t n = 0; n < cfg.count; ++n) {
    Trace t;
    t.h0 = h0;
    t.y0 = dfa.accepting[dfa.start];
    const std::size_t len = length(rng);
    std::size_t q = dfa.start;
    for (std::size_t i = 0; i < len; ++i) {
      const double x = letter(rng);
      q = dfa.next[q][static_cast<std::size_t>(letter_bit(id, x))];
      t.steps.push_back(TraceStep{{x}, hidden(q), static_cast<bool>(dfa.accepting[q])});
    }
    set.traces.push_back(std::move(t));
  }
  return set;
}

} // namespace ila
