#include "ila/trace.hpp"

#include <cmath>
#include <string>

#include "ila/error.hpp"

namespace ila {

Word Trace::word() const {
  Word w;
  w.reserve(steps.size());
  for (const auto& s : steps)
    w.push_back(s.x);
  return w;
}

namespace {

void check_vector(const std::vector<double>& v, std::optional<std::size_t>& expected,
                  const char* what, std::size_t trace) {
  for (double c : v)
    if (!std::isfinite(c))
      throw InvalidValue(std::string("non-finite ") + what + " component in trace " +
                         std::to_string(trace));
  if (!expected) {
    expected = v.size();
  } else if (*expected != v.size()) {
    throw DimensionMismatch(std::string(what) + " of dimension " + std::to_string(v.size()) +
                            " in trace " + std::to_string(trace) + ", expected " +
                            std::to_string(*expected));
  }
}

} // namespace

TraceDims validate(const TraceSet& set) {
  std::optional<std::size_t> d = set.dim;
  std::optional<std::size_t> m = set.hidden_dim;
  for (std::size_t i = 0; i < set.traces.size(); ++i) {
    const Trace& t = set.traces[i];
    if (t.h0)
      check_vector(*t.h0, m, "h0", i);
    for (const auto& s : t.steps) {
      check_vector(s.x, d, "x", i);
      check_vector(s.h, m, "h", i);
    }
  }
  if (d && *d == 0)
    throw DimensionMismatch("input letters must have at least one component");
  return TraceDims{d.value_or(0), m.value_or(0)};
}

bool resolved_y0(const TraceSet& set, std::size_t i) {
  const Trace& t = set.traces.at(i);
  if (t.y0)
    return *t.y0;
  return set.y0_default.value_or(false);
}

} // namespace ila
