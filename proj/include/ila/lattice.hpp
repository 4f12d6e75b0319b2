#ifndef ILA_LATTICE_HPP
#define ILA_LATTICE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ila {

/// Closed interval over the extended reals. Infinite bounds are allowed,
/// NaN is not. A half-open bound such as [a, c[ is stored as
/// [a, prev(c)], i.e. with the largest double below c.
class Interval {
public:
  Interval(double lo, double hi);

  static Interval point(double x);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool is_point() const noexcept { return lo_ == hi_; }
  bool bounded() const noexcept;
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  /// Midpoint; throws InvalidValue on an unbounded interval.
  double mid() const;

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  double lo_;
  double hi_;
};

Interval hull(const Interval& a, const Interval& b) noexcept;

/// A d-tuple of intervals, or the bottom element of the box lattice.
class Box {
public:
  /// Bottom.
  Box() = default;
  explicit Box(std::vector<Interval> dims);

  static Box bottom() { return Box{}; }

  bool is_bottom() const noexcept { return dims_.empty(); }
  /// Number of dimensions; 0 for bottom.
  std::size_t dim() const noexcept { return dims_.size(); }
  const Interval& operator[](std::size_t i) const { return dims_.at(i); }
  const std::vector<Interval>& intervals() const noexcept { return dims_; }

  bool bounded() const noexcept;
  bool is_atom() const noexcept;
  bool contains(std::span<const double> point) const;

  friend bool operator==(const Box&, const Box&) = default;

private:
  std::vector<Interval> dims_;
};

/// Least upper bound: componentwise interval hull, bottom is the identity.
Box join(const Box& a, const Box& b);

/// Partial order: componentwise containment, bottom below everything.
bool leq(const Box& a, const Box& b);

/// The atom of a point. Rejects non-finite components.
Box abstract(std::span<const double> x);

/// Componentwise midpoint of a non-bottom bounded box.
std::vector<double> mid(const Box& b);

/// Finite grid partition of R^d. Per dimension, cut points c1 < ... < ck
/// give the cells (-inf, c1), [c1, c2), ..., [ck, +inf); classes are the
/// crossed cells, indexed lexicographically with dimension 0 most
/// significant.
class Partition {
public:
  explicit Partition(std::vector<std::vector<double>> cuts);

  /// One dimension with a single cut point.
  static Partition single_cut(double cut) { return Partition(std::vector<std::vector<double>>{{cut}}); }

  std::size_t dim() const noexcept { return cuts_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  const std::vector<std::vector<double>>& cuts() const noexcept { return cuts_; }

  std::size_t class_of(std::span<const double> point) const;
  /// The unique class whose cell contains the whole box.
  /// Throws StraddlesPartition when the box crosses a cut.
  std::size_t class_of(const Box& b) const;

  /// Maximal element of class i, with open upper ends stored as prev(cut).
  Box cell(std::size_t i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::size_t cell_index(std::size_t dim, double v) const;

  std::vector<std::vector<double>> cuts_;
  std::size_t class_count_ = 1;
};

std::string to_string(const Interval& i);
std::string to_string(const Box& b);

} // namespace ila

#endif
