#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ila/io.hpp"

namespace ila {

namespace {

std::string fmt(double v) {
  if (std::isinf(v))
    return v > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string interval_label(const Interval& i, const std::vector<double>& cuts) {
  std::string s = "[" + fmt(i.lo()) + ", ";
  if (std::isfinite(i.hi())) {
    const double up = std::nextafter(i.hi(), std::numeric_limits<double>::infinity());
    for (double c : cuts)
      if (c == up)
        return s + fmt(c) + ")";
  }
  return s + fmt(i.hi()) + "]";
}

} // namespace

std::string to_dot(const LatticeAutomaton& a) {
  std::ostringstream os;
  os << "digraph ila {\n  rankdir=LR;\n";
  for (StateId q : a.initial())
    os << "  __start" << q << " [shape=point];\n";
  for (StateId q : a.states())
    os << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << ", label=\"q"
       << q << "\"];\n";
  for (StateId q : a.initial())
    os << "  __start" << q << " -> q" << q << ";\n";
  const auto& cuts = a.partition().cuts();
  for (const auto& t : a.transitions()) {
    os << "  q" << t.source << " -> q" << t.target << " [label=\"";
    for (std::size_t d = 0; d < t.label.dim(); ++d)
      os << (d ? " x " : "") << interval_label(t.label[d], cuts[d]);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace ila
