#include "ila/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ila/error.hpp"

namespace ila {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi))
    throw InvalidValue("interval bound is NaN");
  if (lo > hi)
    throw InvalidValue("interval with lo > hi: " + to_string(*this));
}

Interval Interval::point(double x) {
  if (!std::isfinite(x))
    throw InvalidValue("point interval needs a finite value");
  return Interval(x, x);
}

bool Interval::bounded() const noexcept {
  return std::isfinite(lo_) && std::isfinite(hi_);
}

double Interval::mid() const {
  if (!bounded())
    throw InvalidValue("midpoint of unbounded interval " + to_string(*this));
  return (lo_ + hi_) / 2;
}

Interval hull(const Interval& a, const Interval& b) noexcept {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Box::Box(std::vector<Interval> dims) : dims_(std::move(dims)) {
  if (dims_.empty())
    throw DimensionMismatch("a non-bottom box needs at least one dimension");
}

bool Box::bounded() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(),
                     [](const Interval& i) { return i.bounded(); });
}

bool Box::is_atom() const noexcept {
  return !is_bottom() && std::all_of(dims_.begin(), dims_.end(), [](const Interval& i) {
    return i.is_point() && i.bounded();
  });
}

bool Box::contains(std::span<const double> point) const {
  if (is_bottom())
    return false;
  if (point.size() != dims_.size())
    throw DimensionMismatch("point of dimension " + std::to_string(point.size()) +
                            " against box of dimension " + std::to_string(dims_.size()));
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (!dims_[i].contains(point[i]))
      return false;
  return true;
}

namespace {

void require_same_dim(const Box& a, const Box& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("boxes of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
}

} // namespace

Box join(const Box& a, const Box& b) {
  if (a.is_bottom())
    return b;
  if (b.is_bottom())
    return a;
  require_same_dim(a, b);
  std::vector<Interval> dims;
  dims.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    dims.push_back(hull(a[i], b[i]));
  return Box(std::move(dims));
}

bool leq(const Box& a, const Box& b) {
  if (a.is_bottom())
    return true;
  if (b.is_bottom())
    return false;
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b[i].contains(a[i]))
      return false;
  return true;
}

Box abstract(std::span<const double> x) {
  if (x.empty())
    throw DimensionMismatch("cannot abstract a zero-dimensional point");
  std::vector<Interval> dims;
  dims.reserve(x.size());
  for (double v : x)
    dims.push_back(Interval::point(v));
  return Box(std::move(dims));
}

std::vector<double> mid(const Box& b) {
  if (b.is_bottom())
    throw InvalidValue("midpoint of bottom");
  std::vector<double> m;
  m.reserve(b.dim());
  for (const auto& i : b.intervals())
    m.push_back(i.mid());
  return m;
}

Partition::Partition(std::vector<std::vector<double>> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.empty())
    throw DimensionMismatch("partition needs at least one dimension");
  for (const auto& c : cuts_) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!std::isfinite(c[i]))
        throw InvalidValue("partition cut points must be finite");
      if (i > 0 && !(c[i - 1] < c[i]))
        throw InvalidValue("partition cut points must be strictly increasing");
    }
    class_count_ *= c.size() + 1;
  }
}

std::size_t Partition::cell_index(std::size_t dim, double v) const {
  const auto& c = cuts_[dim];
  return static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), v) - c.begin());
}

std::size_t Partition::class_of(std::span<const double> point) const {
  if (point.size() != dim())
    throw DimensionMismatch("point of dimension " + std::to_string(point.size()) +
                            " against partition of dimension " + std::to_string(dim()));
  std::size_t index = 0;
  for (std::size_t d = 0; d < dim(); ++d) {
    if (std::isnan(point[d]))
      throw InvalidValue("NaN letter");
    index = index * (cuts_[d].size() + 1) + cell_index(d, point[d]);
  }
  return index;
}

std::size_t Partition::class_of(const Box& b) const {
  if (b.is_bottom())
    throw InvalidValue("bottom has no partition class");
  if (b.dim() != dim())
    throw DimensionMismatch("box of dimension " + std::to_string(b.dim()) +
                            " against partition of dimension " + std::to_string(dim()));
  std::size_t index = 0;
  for (std::size_t d = 0; d < dim(); ++d) {
    const std::size_t lo = cell_index(d, b[d].lo());
    const std::size_t hi = cell_index(d, b[d].hi());
    if (lo != hi)
      throw StraddlesPartition("box " + to_string(b) + " crosses a cut point in dimension " +
                               std::to_string(d));
    index = index * (cuts_[d].size() + 1) + lo;
  }
  return index;
}

Box Partition::cell(std::size_t i) const {
  if (i >= class_count_)
    throw InvalidValue("class index " + std::to_string(i) + " out of range");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Interval> dims(dim(), Interval(-inf, inf));
  for (std::size_t d = dim(); d-- > 0;) {
    const auto& c = cuts_[d];
    const std::size_t k = i % (c.size() + 1);
    i /= c.size() + 1;
    const double lo = k == 0 ? -inf : c[k - 1];
    const double hi = k == c.size() ? inf : std::nextafter(c[k], -inf);
    dims[d] = Interval(lo, hi);
  }
  return Box(std::move(dims));
}

std::string to_string(const Interval& i) {
  std::ostringstream os;
  os << '[' << i.lo() << ", " << i.hi() << ']';
  return os.str();
}

std::string to_string(const Box& b) {
  if (b.is_bottom())
    return "bottom";
  std::string s;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (i)
      s += " x ";
    s += to_string(b[i]);
  }
  return s;
}

} // namespace ila
