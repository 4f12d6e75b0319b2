#include "ila/ipta.hpp"

#include <map>
#include <sstream>

namespace ila {

CoherenceError::CoherenceError(CoherenceConflict c)
    : Error("trace set is not coherent with the partition at prefix length " +
            std::to_string(c.length)),
      conflict_(std::move(c)) {}

namespace {

void print_prefix(std::ostream& os, const Trace& t, std::size_t length) {
  os << '(';
  for (std::size_t i = 0; i < length; ++i) {
    if (i)
      os << ", ";
    const auto& x = t.steps[i].x;
    if (x.size() == 1) {
      os << x[0];
    } else {
      os << '<';
      for (std::size_t j = 0; j < x.size(); ++j)
        os << (j ? " " : "") << x[j];
      os << '>';
    }
  }
  os << ')';
}

[[noreturn]] void conflict_at(std::optional<std::size_t> first, std::size_t second,
                              std::size_t length, bool first_y, bool second_y) {
  CoherenceConflict c;
  c.first_trace = first;
  c.second_trace = second;
  c.length = length;
  c.first_y = first_y;
  c.second_y = second_y;
  throw CoherenceError(std::move(c));
}

void add_sequence_impl(LatticeAutomaton& a, const Trace& s, std::size_t index,
                       std::optional<bool> y0) {
  if (a.initial().size() != 1)
    throw Error("add_sequence needs exactly one initial state");
  StateId q = *a.initial().begin();
  if (y0 && *y0 != a.is_final(q))
    conflict_at(std::nullopt, index, 0, a.is_final(q), *y0);
  if (s.h0)
    a.join_gamma(q, abstract(*s.h0));

  const Partition& p = a.partition();
  for (std::size_t t = 0; t < s.steps.size(); ++t) {
    const TraceStep& step = s.steps[t];
    const Box letter = abstract(step.x);
    const Box hidden = abstract(step.h);
    const auto& edges = a.out(q, p.class_of(step.x));
    if (!edges.empty()) {
      const StateId next = edges.front().target;
      a.add_transition(q, letter, next);
      a.join_gamma(next, hidden);
      if (a.is_final(next) != step.y)
        conflict_at(std::nullopt, index, t + 1, a.is_final(next), step.y);
      q = next;
    } else {
      const StateId next = a.add_state(hidden);
      a.add_transition(q, letter, next);
      a.set_final(next, step.y);
      q = next;
    }
  }
}

} // namespace

std::string describe(const CoherenceConflict& c, const TraceSet& set) {
  std::ostringstream os;
  os << "coherence conflict at prefix length " << c.length << ": ";
  if (c.first_trace) {
    os << "trace " << *c.first_trace << " prefix ";
    print_prefix(os, set.traces.at(*c.first_trace), c.length);
    os << " has y=" << c.first_y << ", ";
  } else {
    os << "an earlier prefix has y=" << c.first_y << ", ";
  }
  os << "trace " << c.second_trace << " prefix ";
  print_prefix(os, set.traces.at(c.second_trace), c.length);
  os << " has y=" << c.second_y << "; classes (";
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    os << (i ? " " : "") << c.classes[i];
  os << ')';
  return os.str();
}

std::optional<CoherenceConflict> check_coherence(const TraceSet& set, const Partition& p) {
  struct Node {
    std::map<std::size_t, std::size_t> children;
    bool y = false;
    std::size_t trace = 0;
  };
  if (set.traces.empty())
    return std::nullopt;

  std::vector<Node> trie(1);
  trie[0].y = resolved_y0(set, 0);
  for (std::size_t i = 0; i < set.traces.size(); ++i) {
    const Trace& t = set.traces[i];
    std::vector<std::size_t> classes;
    const bool y0 = resolved_y0(set, i);
    if (y0 != trie[0].y)
      return CoherenceConflict{trie[0].trace, i, 0, trie[0].y, y0, {}};
    std::size_t at = 0;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      const std::size_t cls = p.class_of(t.steps[k].x);
      classes.push_back(cls);
      auto it = trie[at].children.find(cls);
      if (it == trie[at].children.end()) {
        trie.push_back(Node{{}, t.steps[k].y, i});
        const std::size_t child = trie.size() - 1;
        trie[at].children.emplace(cls, child);
        at = child;
        continue;
      }
      at = it->second;
      if (trie[at].y != t.steps[k].y)
        return CoherenceConflict{trie[at].trace, i, k + 1, trie[at].y, t.steps[k].y, classes};
    }
  }
  return std::nullopt;
}

void add_sequence(LatticeAutomaton& a, const Trace& s) { add_sequence_impl(a, s, 0, s.y0); }

LatticeAutomaton build_ipta(const TraceSet& set, const Partition& p) {
  const TraceDims dims = validate(set);
  if (dims.input != 0 && dims.input != p.dim())
    throw DimensionMismatch("traces of input dimension " + std::to_string(dims.input) +
                            " with a partition of dimension " + std::to_string(p.dim()));

  LatticeAutomaton a(p.dim(), p);
  // Traces without an explicit h0 start from the zero vector.
  bool implicit_h0 = set.traces.empty();
  for (const auto& t : set.traces)
    implicit_h0 = implicit_h0 || !t.h0.has_value();
  Box root_gamma;
  if (implicit_h0 && dims.hidden > 0)
    root_gamma = abstract(std::vector<double>(dims.hidden, 0.0));
  const StateId q0 = a.add_state(std::move(root_gamma));
  a.set_initial(q0);
  const bool y0 = set.traces.empty() ? set.y0_default.value_or(false) : resolved_y0(set, 0);
  a.set_final(q0, y0);

  try {
    for (std::size_t i = 0; i < set.traces.size(); ++i)
      add_sequence_impl(a, set.traces[i], i, resolved_y0(set, i));
  } catch (const CoherenceError&) {
    if (auto full = check_coherence(set, p))
      throw CoherenceError(std::move(*full));
    throw;
  }
  return a;
}

} // namespace ila
