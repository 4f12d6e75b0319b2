#include "ila/elman.hpp"

#include <cmath>
#include <string>

#include "ila/error.hpp"

namespace ila {

namespace {

void expect_size(const std::vector<double>& v, std::size_t n, const char* name) {
  if (v.size() != n)
    throw DimensionMismatch(std::string(name) + " has " + std::to_string(v.size()) +
                            " entries, expected " + std::to_string(n));
  for (double x : v)
    if (!std::isfinite(x))
      throw InvalidValue(std::string(name) + " has a non-finite entry");
}

} // namespace

void ElmanWeights::validate() const {
  if (input_dim == 0 || hidden_dim == 0)
    throw DimensionMismatch("weights need d >= 1 and m >= 1");
  expect_size(wx, hidden_dim * input_dim, "Wx");
  expect_size(wh, hidden_dim * hidden_dim, "Wh");
  expect_size(b, hidden_dim, "b");
  expect_size(wo, hidden_dim, "wo");
  if (!std::isfinite(c))
    throw InvalidValue("c is not finite");
}

ElmanWeights ElmanWeights::zeros(std::size_t d, std::size_t m) {
  ElmanWeights w;
  w.input_dim = d;
  w.hidden_dim = m;
  w.wx.assign(m * d, 0.0);
  w.wh.assign(m * m, 0.0);
  w.b.assign(m, 0.0);
  w.wo.assign(m, 0.0);
  return w;
}

std::vector<double> elman_step(const ElmanWeights& w, std::span<const double> x,
                               std::span<const double> h) {
  if (x.size() != w.input_dim)
    throw DimensionMismatch("input of dimension " + std::to_string(x.size()) + ", expected " +
                            std::to_string(w.input_dim));
  if (h.size() != w.hidden_dim)
    throw DimensionMismatch("hidden state of dimension " + std::to_string(h.size()) +
                            ", expected " + std::to_string(w.hidden_dim));
  const std::size_t d = w.input_dim;
  const std::size_t m = w.hidden_dim;
  std::vector<double> next(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = w.b[i];
    for (std::size_t j = 0; j < d; ++j)
      acc += w.wx[i * d + j] * x[j];
    for (std::size_t j = 0; j < m; ++j)
      acc += w.wh[i * m + j] * h[j];
    next[i] = std::tanh(acc);
  }
  return next;
}

bool classify(const ElmanWeights& w, std::span<const double> h) {
  if (h.size() != w.hidden_dim)
    throw DimensionMismatch("hidden state of dimension " + std::to_string(h.size()) +
                            ", expected " + std::to_string(w.hidden_dim));
  double logit = w.c;
  for (std::size_t i = 0; i < h.size(); ++i)
    logit += w.wo[i] * h[i];
  return logit > 0.0;
}

Trace run_rnn(const ElmanWeights& w, const Word& word) {
  Trace t;
  std::vector<double> h(w.hidden_dim, 0.0);
  t.h0 = h;
  t.y0 = classify(w, h);
  t.steps.reserve(word.size());
  for (const auto& x : word) {
    h = elman_step(w, x, h);
    t.steps.push_back(TraceStep{x, h, classify(w, h)});
  }
  return t;
}

} // namespace ila
