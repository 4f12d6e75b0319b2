#include <doctest.h>

#include <random>

#include "ila/error.hpp"
#include "ila/lattice.hpp"
#include "support.hpp"

using namespace ila;
using ila::testing::iv;
using ila::testing::kInf;

namespace {

Box box2(double a, double b, double c, double d) { return Box({Interval(a, b), Interval(c, d)}); }

Box random_box(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> k(-20, 20);
  std::vector<Interval> dims;
  for (std::size_t i = 0; i < dim; ++i) {
    const double u = k(rng) / 2.0;
    const double v = k(rng) / 2.0;
    dims.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Box(std::move(dims));
}

/// Componentwise min/max, written out independently of join().
Box hull_oracle(const Box& a, const Box& b) {
  std::vector<Interval> dims;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double lo = a[i].lo() < b[i].lo() ? a[i].lo() : b[i].lo();
    double hi = a[i].hi() > b[i].hi() ? a[i].hi() : b[i].hi();
    dims.emplace_back(lo, hi);
  }
  return Box(std::move(dims));
}

} // namespace

TEST_CASE("interval construction rejects NaN and reversed bounds") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), InvalidValue);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), InvalidValue);
  CHECK_THROWS_AS(Interval::point(kInf), InvalidValue);
  CHECK(Interval(-kInf, kInf).contains(0.0));
}

TEST_CASE("join") {
  CHECK(join(iv(1.4, 1.4), iv(3.39, 3.39)) == iv(1.4, 3.39));
  const Box a = box2(0, 1, 5, 6);
  CHECK(join(a, Box::bottom()) == a);
  CHECK(join(Box::bottom(), a) == a);
  CHECK(join(Box::bottom(), Box::bottom()).is_bottom());
  CHECK(join(a, box2(2, 3, 4, 5)) == box2(0, 3, 4, 6));
  CHECK_THROWS_AS(join(a, iv(0, 1)), DimensionMismatch);
}

TEST_CASE("leq") {
  CHECK(leq(iv(1.4, 1.4), iv(1.4, 3.39)));
  CHECK_FALSE(leq(iv(1.4, 3.39), iv(1.4, 1.4)));
  CHECK(leq(Box::bottom(), iv(0, 0)));
  CHECK_FALSE(leq(iv(0, 0), Box::bottom()));
  CHECK_THROWS_AS(leq(iv(0, 1), box2(0, 1, 0, 1)), DimensionMismatch);
}

TEST_CASE("abstract and mid") {
  CHECK(abstract(std::vector<double>{1.4}) == iv(1.4, 1.4));
  CHECK(abstract(std::vector<double>{0, 0}) == box2(0, 0, 0, 0));
  CHECK(abstract(std::vector<double>{1.4}).is_atom());
  CHECK_THROWS_AS(abstract(std::vector<double>{std::nan("")}), InvalidValue);
  CHECK_THROWS_AS(abstract(std::vector<double>{1.0, kInf}), InvalidValue);

  CHECK(mid(iv(1.4, 3.39))[0] == doctest::Approx(2.395).epsilon(1e-15));
  CHECK_THROWS_AS(mid(iv(-kInf, 0)), InvalidValue);
  CHECK_THROWS_AS(mid(Box::bottom()), InvalidValue);
}

TEST_CASE("class_of with the sign partition") {
  const Partition p = Partition::single_cut(0.0);
  CHECK(p.class_count() == 2);
  CHECK(p.class_of(iv(1.4, 3.39)) == 1);
  CHECK(p.class_of(iv(-3.2, -1.07)) == 0);
  CHECK(p.class_of(iv(0, 0)) == 1);
  CHECK_THROWS_AS(p.class_of(iv(-1, 1)), StraddlesPartition);
  CHECK_THROWS_AS(p.class_of(iv(-kInf, 0)), StraddlesPartition);
  CHECK(p.class_of(iv(-kInf, testing::below(0.0))) == 0);
  CHECK_THROWS_AS(p.class_of(Box::bottom()), InvalidValue);
}

TEST_CASE("multi-dimensional partition cells are lexicographic") {
  const Partition p(std::vector<std::vector<double>>{{0.0}, {-1.0, 1.0}});
  CHECK(p.class_count() == 6);
  CHECK(p.class_of(std::vector<double>{-5, -5}) == 0);
  CHECK(p.class_of(std::vector<double>{-5, 0}) == 1);
  CHECK(p.class_of(std::vector<double>{-5, 1}) == 2);
  CHECK(p.class_of(std::vector<double>{0, -1}) == 4);
  for (std::size_t i = 0; i < p.class_count(); ++i)
    CHECK(p.class_of(p.cell(i)) == i);
  CHECK_THROWS_AS(Partition(std::vector<std::vector<double>>{{1.0, 1.0}}), InvalidValue);
  CHECK_THROWS_AS(Partition(std::vector<std::vector<double>>{{kInf}}), InvalidValue);
}

TEST_CASE("lattice laws on random boxes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const Box a = random_box(rng, dim);
    const Box b = random_box(rng, dim);
    const Box c = random_box(rng, dim);
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(join(a, a) == a);
    CHECK(leq(a, a));
    CHECK(leq(a, join(a, b)));
    CHECK(leq(b, join(a, b)));
    CHECK(join(a, b) == hull_oracle(a, b));
    if (leq(a, b) && leq(b, a))
      CHECK(a == b);
    if (leq(a, b) && leq(b, c))
      CHECK(leq(a, c));
    // Least upper bound: any box above both is above the join.
    const Box up = join(join(a, b), c);
    CHECK(leq(join(a, b), up));
  }
}

TEST_CASE("partition classes are stable under join") {
  std::mt19937_64 rng(5);
  const Partition p(std::vector<std::vector<double>>{{-2.0, 0.0, 3.0}});
  std::uniform_int_distribution<int> k(-40, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = k(rng) / 4.0;
    const double y = k(rng) / 4.0;
    const Box a = iv(x, x);
    const Box b = iv(y, y);
    if (p.class_of(a) == p.class_of(b))
      CHECK(p.class_of(join(a, b)) == p.class_of(a));
    const std::vector<double> pt{x};
    CHECK(mid(abstract(pt))[0] == x);
  }
}
