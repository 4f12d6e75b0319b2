// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls into the code paths it is used to check.
#ifndef ILA_TESTS_SUPPORT_HPP
#define ILA_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "ila/automaton.hpp"
#include "ila/trace.hpp"

namespace ila::testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest double strictly below x; closes the open end of [a, x[.
inline double below(double x) { return std::nextafter(x, -kInf); }

inline TraceStep step(double x, std::vector<double> h, bool y) {
  return TraceStep{{x}, std::move(h), y};
}

/// Four short traces of a network for real-valued Tomita language 4, used
/// as the worked prefix-tree example. Each step gets a distinct made-up
/// 2-d hidden vector.
inline TraceSet example_traces() {
  TraceSet s;
  s.dim = 1;
  s.hidden_dim = 2;
  s.y0_default = true;
  Trace s1, s2, s3, s4;
  s1.steps = {step(1.4, {0.11, 0.12}, true), step(-1.07, {0.13, -0.14}, true),
              step(1.08, {0.15, 0.16}, true), step(-7.06, {0.17, -0.18}, true),
              step(9.03, {0.19, 0.20}, true)};
  s2.steps = {step(3.39, {0.21, 0.22}, true), step(-3.2, {0.23, -0.24}, true),
              step(7.91, {0.25, 0.26}, true), step(-3.45, {0.27, -0.28}, true),
              step(2.1, {0.29, 0.30}, true)};
  s3.steps = {step(1.9, {0.31, 0.32}, true), step(3.56, {0.33, 0.34}, true),
              step(3.14, {-0.35, 0.36}, false), step(-33.2, {-0.37, -0.38}, false)};
  s4.steps = {step(2.3, {0.41, 0.42}, true), step(2.29, {0.43, 0.44}, true),
              step(2.06, {-0.45, 0.46}, false), step(-0.51, {-0.47, -0.48}, false)};
  s.traces = {s1, s2, s3, s4};
  return s;
}

inline Box iv(double lo, double hi) { return Box({Interval(lo, hi)}); }

/// The example lattice automaton over R with the sign partition. Its sink
/// q3 loops on the nonnegative class only: a negative letter there kills
/// the run, which leaves the language unchanged while keeping every label
/// inside one class (7 transitions).
inline LatticeAutomaton example_automaton() {
  LatticeAutomaton a(1, Partition::single_cut(0.0));
  for (int i = 0; i < 4; ++i)
    a.add_state();
  a.set_initial(0);
  a.set_final(0);
  a.set_final(1);
  a.set_final(2);
  const Box neg = iv(-kInf, below(0.0));
  const Box pos = iv(0.0, kInf);
  a.add_transition(0, neg, 0);
  a.add_transition(0, pos, 1);
  a.add_transition(1, pos, 2);
  a.add_transition(2, pos, 3);
  a.add_transition(1, neg, 0);
  a.add_transition(2, neg, 0);
  a.add_transition(3, pos, 3);
  return a;
}

/// Membership by depth-first enumeration of every run, scanning the flat
/// transition list and testing containment with the lattice order.
inline bool brute_force_accepts(const LatticeAutomaton& a, const Word& w) {
  const auto all = a.transitions();
  std::function<bool(StateId, std::size_t)> dfs = [&](StateId q, std::size_t i) {
    if (i == w.size())
      return a.is_final(q);
    const Box atom = abstract(w[i]);
    for (const auto& t : all)
      if (t.source == q && leq(atom, t.label) && dfs(t.target, i + 1))
        return true;
    return false;
  };
  for (StateId q0 : a.initial())
    if (dfs(q0, 0))
      return true;
  return false;
}

/// Random automaton with up to `max_states` states over R, labels drawn
/// inside the cells of `p` clipped to [-5, 5].
inline LatticeAutomaton random_automaton(std::mt19937_64& rng, const Partition& p,
                                         std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> count(1, max_states);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  LatticeAutomaton a(1, p);
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i)
    a.add_state(abstract(std::vector<double>{coin(rng), coin(rng) - 0.5}));
  for (StateId q = 0; q < n; ++q) {
    if (coin(rng) < 0.4)
      a.set_initial(q);
    if (coin(rng) < 0.4)
      a.set_final(q);
  }
  if (a.initial().empty())
    a.set_initial(0);
  const double density = 0.2 + 0.5 * coin(rng);
  for (StateId q = 0; q < n; ++q)
    for (StateId r = 0; r < n; ++r)
      for (std::size_t cls = 0; cls < p.class_count(); ++cls) {
        if (coin(rng) > density)
          continue;
        const Box cell = p.cell(cls);
        const double lo = std::max(cell[0].lo(), -5.0);
        const double hi = std::min(cell[0].hi(), 5.0);
        std::uniform_real_distribution<double> in(lo, hi);
        double u = std::round(in(rng) * 4) / 4;
        double v = std::round(in(rng) * 4) / 4;
        u = std::clamp(u, lo, hi);
        v = std::clamp(v, lo, hi);
        a.add_transition(q, iv(std::min(u, v), std::max(u, v)), r);
      }
  return a;
}

/// Words over a quarter-step grid in [-6, 6], so letters regularly land on
/// label endpoints and cut points.
inline Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> k(-24, 24);
  Word w(len(rng));
  for (auto& l : w)
    l = {k(rng) / 4.0};
  return w;
}

/// Is there a run reading x_1..x_k from an initial state to a final state
/// with h_i inside Gamma(q_i) at every step?
inline bool accepts_with_hidden(const LatticeAutomaton& a, const std::vector<TraceStep>& prefix) {
  std::set<StateId> current(a.initial().begin(), a.initial().end());
  const auto all = a.transitions();
  for (const auto& s : prefix) {
    std::set<StateId> next;
    const Box atom = abstract(s.x);
    const Box hidden = abstract(s.h);
    for (const auto& t : all)
      if (current.contains(t.source) && leq(atom, t.label) && leq(hidden, a.gamma(t.target)))
        next.insert(t.target);
    current = std::move(next);
  }
  for (StateId q : current)
    if (a.is_final(q))
      return true;
  return false;
}

} // namespace ila::testing

#endif
