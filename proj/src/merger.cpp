#include "ila/merger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "ila/error.hpp"

namespace ila {

namespace {

enum class Direction { none, zero, vector };

/// What the score needs to know about one state.
struct Features {
  bool final = false;
  Direction kind = Direction::none;
  std::vector<double> mid;
  double norm = 0.0;
};

Features features_of(const LatticeAutomaton& a, StateId q) {
  Features f;
  f.final = a.is_final(q);
  const Box& g = a.gamma(q);
  if (g.is_bottom() || !g.bounded())
    return f;
  f.mid = ila::mid(g);
  double sq = 0.0;
  for (double v : f.mid)
    sq += v * v;
  f.norm = std::sqrt(sq);
  f.kind = f.norm == 0.0 ? Direction::zero : Direction::vector;
  return f;
}

double score(const Features& a, const Features& b) {
  if (a.final != b.final)
    return 2.0;
  if (a.kind != b.kind)
    return 2.0;
  if (a.kind != Direction::vector)
    return 0.0;
  if (a.mid.size() != b.mid.size())
    throw DimensionMismatch("Gamma boxes of different dimensions");
  double dot = 0.0;
  for (std::size_t i = 0; i < a.mid.size(); ++i)
    dot += a.mid[i] * b.mid[i];
  const double s = 1.0 - dot / (a.norm * b.norm);
  return std::clamp(s, 0.0, 2.0);
}

/// A scored pair of slots, lo < hi. Slots are ordered like state ids, so
/// comparing candidates implements the tie-breaking rule.
struct Candidate {
  double score = std::numeric_limits<double>::infinity();
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = std::numeric_limits<std::size_t>::max();

  bool valid() const noexcept { return lo != std::numeric_limits<std::size_t>::max(); }
  std::size_t other(std::size_t s) const noexcept { return s == lo ? hi : lo; }

  friend bool operator<(const Candidate& a, const Candidate& b) {
    return std::tie(a.score, a.lo, a.hi) < std::tie(b.score, b.lo, b.hi);
  }
  friend bool operator<=(const Candidate& a, const Candidate& b) { return !(b < a); }
};

Candidate make_candidate(double s, std::size_t a, std::size_t b) {
  return Candidate{s, std::min(a, b), std::max(a, b)};
}

/// Features of every state in flat arrays, so a full scan over partners
/// stays in cache.
class FeatureTable {
public:
  explicit FeatureTable(const LatticeAutomaton& a, const std::vector<StateId>& ids) {
    final_.resize(ids.size());
    kind_.resize(ids.size());
    norm_.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      set(i, features_of(a, ids[i]));
  }

  void set(std::size_t i, const Features& f) {
    if (f.kind == Direction::vector) {
      if (width_ == 0)
        width_ = f.mid.size();
      else if (f.mid.size() != width_)
        throw DimensionMismatch("Gamma boxes of different dimensions");
      if (mid_.size() < final_.size() * width_)
        mid_.resize(final_.size() * width_);
      std::copy(f.mid.begin(), f.mid.end(), mid_.begin() + static_cast<std::ptrdiff_t>(i * width_));
    }
    final_[i] = f.final;
    kind_[i] = f.kind;
    norm_[i] = f.norm;
  }

  /// Same arithmetic as score(), on table rows.
  double operator()(std::size_t i, std::size_t j) const {
    if (final_[i] != final_[j] || kind_[i] != kind_[j])
      return 2.0;
    if (kind_[i] != Direction::vector)
      return 0.0;
    const double* x = mid_.data() + i * width_;
    const double* y = mid_.data() + j * width_;
    double dot = 0.0;
    for (std::size_t k = 0; k < width_; ++k)
      dot += x[k] * y[k];
    return std::clamp(1.0 - dot / (norm_[i] * norm_[j]), 0.0, 2.0);
  }

private:
  std::vector<char> final_;
  std::vector<Direction> kind_;
  std::vector<double> norm_;
  std::vector<double> mid_;
  std::size_t width_ = 0;
};

/// Maintains, for every live state, its best partner. A record is exact
/// when it is the true minimum over all partners, otherwise it is a lower
/// bound. The heap holds every record, so its smallest exact entry is the
/// global minimum.
class PairQueue {
public:
  PairQueue(LatticeAutomaton& a, std::vector<StateId> ids)
      : a_(a), ids_(std::move(ids)), feats_(a, ids_) {
    const std::size_t n = ids_.size();
    alive_.assign(n, 1);
    best_.assign(n, Candidate{});
    exact_.assign(n, 1);
    gen_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Candidate c{feats_(i, j), i, j};
        if (c < best_[i])
          best_[i] = c;
        if (c < best_[j])
          best_[j] = c;
      }
    for (std::size_t i = 0; i < n; ++i)
      publish(i);
  }

  /// Smallest-score live pair, or an invalid candidate when fewer than two
  /// states remain.
  Candidate top() {
    while (!heap_.empty()) {
      const Entry e = heap_.top();
      if (!alive_[e.owner] || e.gen != gen_[e.owner]) {
        heap_.pop();
        continue;
      }
      if (!exact_[e.owner]) {
        heap_.pop();
        recompute(e.owner);
        continue;
      }
      return e.cand;
    }
    return Candidate{};
  }

  void merge(const Candidate& c) {
    const std::size_t keep = c.lo;
    const std::size_t drop = c.hi;
    merge_states(a_, ids_[keep], ids_[drop]);
    alive_[drop] = 0;
    feats_.set(keep, features_of(a_, ids_[keep]));

    Candidate survivor;
    for (std::size_t k = 0; k < ids_.size(); ++k) {
      if (!alive_[k] || k == keep)
        continue;
      const Candidate ck = make_candidate(feats_(k, keep), k, keep);
      if (ck < survivor)
        survivor = ck;
      const std::size_t partner = best_[k].other(k);
      if (partner == keep || partner == drop) {
        // Every other partner of k is unchanged, so its old record still
        // bounds them from below.
        if (!(ck < best_[k]) && !(best_[k] < ck)) {
          // The heap entry of the current generation already holds it.
          exact_[k] = 1;
        } else if (ck < best_[k]) {
          best_[k] = ck;
          exact_[k] = 1;
          publish(k);
        } else {
          exact_[k] = 0;
        }
      } else if (ck < best_[k]) {
        best_[k] = ck;
        exact_[k] = 1;
        publish(k);
      }
    }
    best_[keep] = survivor;
    exact_[keep] = 1;
    publish(keep);
  }

private:
  struct Entry {
    Candidate cand;
    std::size_t owner;
    std::size_t gen;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const { return b.cand < a.cand; }
  };

  void publish(std::size_t i) {
    ++gen_[i];
    if (best_[i].valid())
      heap_.push(Entry{best_[i], i, gen_[i]});
  }

  void recompute(std::size_t i) {
    Candidate b;
    for (std::size_t j = 0; j < ids_.size(); ++j) {
      if (j == i || !alive_[j])
        continue;
      const Candidate c = make_candidate(feats_(i, j), i, j);
      if (c < b)
        b = c;
    }
    best_[i] = b;
    exact_[i] = 1;
    publish(i);
  }

  LatticeAutomaton& a_;
  std::vector<StateId> ids_;
  FeatureTable feats_;
  std::vector<char> alive_;
  std::vector<Candidate> best_;
  std::vector<char> exact_;
  std::vector<std::size_t> gen_;
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
};

} // namespace

double similarity_score(const LatticeAutomaton& a, StateId qi, StateId qj) {
  return score(features_of(a, qi), features_of(a, qj));
}

void merge_states(LatticeAutomaton& a, StateId qi, StateId qj) {
  if (qi == qj)
    throw Error("cannot merge state " + std::to_string(qi) + " into itself");
  if (!a.has_state(qi))
    throw UnknownState("unknown state " + std::to_string(qi));
  if (!a.has_state(qj))
    throw UnknownState("unknown state " + std::to_string(qj));

  const auto redirect = [&](StateId q) { return q == qj ? qi : q; };
  std::vector<Transition> moved;
  const std::size_t classes = a.partition().class_count();
  for (StateId p : a.predecessors(qj))
    for (std::size_t cls = 0; cls < classes; ++cls)
      for (const auto& e : a.out(p, cls))
        if (e.target == qj)
          moved.push_back(Transition{redirect(p), cls, e.label, qi});
  for (std::size_t cls = 0; cls < classes; ++cls)
    for (const auto& e : a.out(qj, cls))
      if (e.target != qj)
        moved.push_back(Transition{qi, cls, e.label, e.target});

  for (const auto& t : moved)
    a.add_transition(t.source, t.label, t.target);
  a.join_gamma(qi, a.gamma(qj));
  if (a.is_initial(qj))
    a.set_initial(qi);
  if (a.is_final(qj))
    a.set_final(qi);
  a.delete_state(qj);
}

std::size_t merge_loop(LatticeAutomaton& a, const MergeConfig& cfg) {
  if (cfg.threshold < 0.0 || std::isnan(cfg.threshold))
    throw InvalidValue("merge threshold must be >= 0");
  const std::size_t limit = cfg.max_merges.value_or(std::numeric_limits<std::size_t>::max());
  if (limit == 0 || cfg.threshold == 0.0 || a.state_count() < 2)
    return 0;

  PairQueue queue(a, a.states());
  std::size_t merges = 0;
  while (merges < limit) {
    const Candidate c = queue.top();
    if (!c.valid() || !(c.score < cfg.threshold))
      break;
    queue.merge(c);
    ++merges;
  }
  return merges;
}

} // namespace ila
