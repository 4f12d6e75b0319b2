#include <doctest.h>

#include <random>
#include <regex>
#include <string>

#include "ila/error.hpp"
#include "ila/tomita.hpp"

using namespace ila;

namespace {

std::vector<int> bits_of(const std::string& s) {
  std::vector<int> b;
  for (char c : s)
    b.push_back(c == '1');
  return b;
}

/// Maximal runs of equal symbols.
std::vector<std::pair<char, std::size_t>> runs(const std::string& s) {
  std::vector<std::pair<char, std::size_t>> r;
  for (char c : s) {
    if (!r.empty() && r.back().first == c)
      ++r.back().second;
    else
      r.emplace_back(c, 1);
  }
  return r;
}

/// Language definitions written directly over strings.
bool reference(int lang, const std::string& s) {
  const auto ones = static_cast<long>(std::count(s.begin(), s.end(), '1'));
  const auto zeros = static_cast<long>(s.size()) - ones;
  switch (lang) {
  case 1:
    return std::regex_match(s, std::regex("1*"));
  case 2:
    return std::regex_match(s, std::regex("(10)*"));
  case 3: {
    const auto r = runs(s);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (r[i].first == '1' && r[i].second % 2 == 1 && r[i + 1].second % 2 == 1)
        return false;
    return true;
  }
  case 4:
    return s.find("000") == std::string::npos;
  case 5:
    return zeros % 2 == 0 && ones % 2 == 0;
  case 6:
    return ((ones - zeros) % 3 + 3) % 3 == 0;
  case 7:
    return std::regex_match(s, std::regex("0*1*0*1*"));
  default:
    return false;
  }
}

Word reals(std::initializer_list<double> xs) {
  Word w;
  for (double x : xs)
    w.push_back({x});
  return w;
}

} // namespace

TEST_CASE("language ids") {
  CHECK(LanguageId::parse("tomita2:4") == LanguageId(Family::tomita2, 4));
  CHECK(LanguageId::parse("tomita:1").family == Family::classic);
  CHECK(LanguageId::parse("tomita2:7").str() == "tomita2:7");
  CHECK_THROWS_AS(LanguageId::parse("tomita2:9"), InvalidValue);
  CHECK_THROWS_AS(LanguageId::parse("tomita2:0"), InvalidValue);
  CHECK_THROWS_AS(LanguageId::parse("dyck:1"), InvalidValue);
  CHECK_THROWS_AS(LanguageId::parse("tomita2"), InvalidValue);
  CHECK_THROWS_AS(LanguageId::parse("tomita2:x"), InvalidValue);
}

TEST_CASE("classic Tomita examples") {
  CHECK(tomita_member(1, bits_of("111")));
  CHECK_FALSE(tomita_member(4, bits_of("1000")));
  CHECK(tomita_member(5, bits_of("")));
  CHECK(tomita_member(3, bits_of("100")));
  CHECK_FALSE(tomita_member(3, bits_of("10")));
  CHECK_FALSE(tomita_member(3, bits_of("1011")));
  CHECK(tomita_member(3, bits_of("1101")));
}

TEST_CASE("classic DFAs agree with the string definitions up to length 10") {
  for (int lang = 1; lang <= 7; ++lang)
    for (int len = 0; len <= 10; ++len)
      for (int code = 0; code < (1 << len); ++code) {
        std::string s;
        for (int i = 0; i < len; ++i)
          s += ((code >> i) & 1) ? '1' : '0';
        CHECK_MESSAGE(tomita_member(lang, bits_of(s)) == reference(lang, s),
                      "language " << lang << " word '" << s << "'");
      }
}

TEST_CASE("Tomita 2.0 examples") {
  CHECK_FALSE(tomita2_member(4, std::vector<double>{-1, -2, -3}));
  CHECK(tomita2_member(2, std::vector<double>{3.39, -3.2}));
  CHECK(tomita2_member(5, std::vector<double>{}));
  CHECK(tomita2_member(1, std::vector<double>{0.0, 10.0}));
  CHECK_FALSE(tomita2_member(1, std::vector<double>{-0.01}));
  // Letters outside [-10, 10] still classify by sign.
  CHECK(tomita2_member(4, std::vector<double>{1.9, 3.56, 3.14, -33.2}));
  CHECK(member(LanguageId(Family::tomita2, 2), reals({3.39, -3.2})));
  CHECK(member(LanguageId(Family::classic, 2), reals({1.0, 0.0})));
  CHECK_THROWS_AS(member(LanguageId(Family::tomita2, 2), Word{{1.0, 2.0}}), DimensionMismatch);
}

TEST_CASE("Tomita 2.0 membership depends only on letter signs") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> mag(0.001, 50.0);
  std::uniform_int_distribution<int> sign(0, 1), len(0, 12);
  for (int lang = 1; lang <= 7; ++lang)
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<double> w(static_cast<std::size_t>(len(rng)));
      std::vector<int> bits;
      for (double& x : w) {
        const int s = sign(rng);
        x = s ? mag(rng) : -mag(rng);
        if (s && trial % 5 == 0)
          x = 0.0;
        bits.push_back(s);
      }
      const bool m = tomita2_member(lang, w);
      CHECK(m == tomita_member(lang, bits));
      if (!w.empty()) {
        auto v = w;
        v[0] = v[0] < 0 ? -mag(rng) : mag(rng);
        CHECK(tomita2_member(lang, v) == m);
      }
    }
}

TEST_CASE("gen_traces") {
  const LanguageId id(Family::tomita2, 4);
  SynthConfig cfg;
  cfg.count = 1000;
  cfg.max_len = 20;
  cfg.seed = 7;
  const TraceSet s = gen_traces(id, cfg);
  CHECK(s.traces.size() == 1000);
  CHECK(s.hidden_dim == tomita_dfa(4).size());
  CHECK(s.y0_default == true);
  for (const auto& t : s.traces) {
    CHECK(t.steps.size() >= 1);
    CHECK(t.steps.size() <= 20);
    REQUIRE(t.h0);
    std::vector<double> prefix;
    for (const auto& st : t.steps) {
      prefix.push_back(st.x[0]);
      CHECK(st.x[0] >= -10.0);
      CHECK(st.x[0] <= 10.0);
      CHECK(st.y == tomita2_member(4, prefix));
      double total = 0;
      for (double v : st.h) {
        CHECK((v == 0.0 || v == 1.0));
        total += v;
      }
      CHECK(total == 1.0);
    }
  }
  CHECK(gen_traces(id, cfg) == s);
  cfg.seed = 8;
  CHECK_FALSE(gen_traces(id, cfg) == s);
}

TEST_CASE("gen_traces for classic languages and with noise") {
  for (int lang = 1; lang <= 7; ++lang) {
    const LanguageId id(Family::classic, lang);
    SynthConfig cfg;
    cfg.count = 50;
    cfg.max_len = 10;
    cfg.noise = 0.05;
    cfg.seed = static_cast<std::uint64_t>(lang);
    const TraceSet s = gen_traces(id, cfg);
    for (const auto& t : s.traces) {
      std::vector<int> bits;
      for (const auto& st : t.steps) {
        CHECK((st.x[0] == 0.0 || st.x[0] == 1.0));
        bits.push_back(st.x[0] == 1.0);
        CHECK(st.y == tomita_member(lang, bits));
      }
    }
  }
  SynthConfig bad;
  bad.max_len = 0;
  CHECK_THROWS_AS(gen_traces(LanguageId(Family::classic, 1), bad), InvalidValue);
}
