#include "ila/automaton.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "ila/error.hpp"

namespace ila {

LatticeAutomaton::LatticeAutomaton(std::size_t dim, Partition partition)
    : dim_(dim), partition_(std::move(partition)) {
  if (dim_ == 0 || partition_.dim() != dim_)
    throw DimensionMismatch("automaton of dimension " + std::to_string(dim_) +
                            " with a partition of dimension " + std::to_string(partition_.dim()));
}

const LatticeAutomaton::Node& LatticeAutomaton::node(StateId q) const {
  auto it = nodes_.find(q);
  if (it == nodes_.end())
    throw UnknownState("unknown state " + std::to_string(q));
  return it->second;
}

LatticeAutomaton::Node& LatticeAutomaton::node(StateId q) {
  auto it = nodes_.find(q);
  if (it == nodes_.end())
    throw UnknownState("unknown state " + std::to_string(q));
  return it->second;
}

StateId LatticeAutomaton::add_state(Box gamma) {
  const StateId id = next_id_;
  add_state(id, std::move(gamma));
  return id;
}

void LatticeAutomaton::add_state(StateId id, Box gamma) {
  if (nodes_.contains(id))
    throw Error("state " + std::to_string(id) + " already exists");
  Node n;
  n.gamma = std::move(gamma);
  n.out.resize(partition_.class_count());
  nodes_.emplace(id, std::move(n));
  next_id_ = std::max<StateId>(next_id_, id + 1);
}

std::vector<StateId> LatticeAutomaton::states() const {
  std::vector<StateId> ids;
  ids.reserve(nodes_.size());
  for (const auto& [id, n] : nodes_)
    ids.push_back(id);
  return ids;
}

void LatticeAutomaton::set_initial(StateId q, bool on) {
  node(q);
  if (on)
    initial_.insert(q);
  else
    initial_.erase(q);
}

void LatticeAutomaton::set_final(StateId q, bool on) {
  node(q);
  if (on)
    final_.insert(q);
  else
    final_.erase(q);
}

void LatticeAutomaton::set_gamma(StateId q, Box g) { node(q).gamma = std::move(g); }

void LatticeAutomaton::join_gamma(StateId q, const Box& g) {
  Node& n = node(q);
  n.gamma = join(n.gamma, g);
}

void LatticeAutomaton::add_transition(StateId q, const Box& label, StateId q2) {
  if (label.is_bottom())
    throw InvalidValue("transition label cannot be bottom");
  if (label.dim() != dim_)
    throw DimensionMismatch("label of dimension " + std::to_string(label.dim()) +
                            " in an automaton of dimension " + std::to_string(dim_));
  Node& src = node(q);
  Node& dst = node(q2);
  const std::size_t cls = partition_.class_of(label);
  auto& edges = src.out[cls];
  auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.target == q2; });
  if (it != edges.end()) {
    it->label = join(it->label, label);
    return;
  }
  edges.push_back(Edge{label, q2});
  ++dst.preds[q];
  ++transition_count_;
}

const std::vector<Edge>& LatticeAutomaton::out(StateId q, std::size_t cls) const {
  const Node& n = node(q);
  if (cls >= n.out.size())
    throw InvalidValue("class index " + std::to_string(cls) + " out of range");
  return n.out[cls];
}

std::vector<StateId> LatticeAutomaton::predecessors(StateId q) const {
  std::vector<StateId> p;
  for (const auto& [src, count] : node(q).preds)
    p.push_back(src);
  return p;
}

std::size_t LatticeAutomaton::out_degree(StateId q) const {
  std::size_t k = 0;
  for (const auto& edges : node(q).out)
    k += edges.size();
  return k;
}

std::size_t LatticeAutomaton::in_degree(StateId q) const {
  std::size_t k = 0;
  for (const auto& [src, count] : node(q).preds)
    k += count;
  return k;
}

std::vector<Transition> LatticeAutomaton::transitions() const {
  std::vector<Transition> all;
  all.reserve(transition_count_);
  for (const auto& [id, n] : nodes_) {
    const std::size_t first = all.size();
    for (std::size_t cls = 0; cls < n.out.size(); ++cls)
      for (const auto& e : n.out[cls])
        all.push_back(Transition{id, cls, e.label, e.target});
    std::sort(all.begin() + static_cast<std::ptrdiff_t>(first), all.end(),
              [](const Transition& a, const Transition& b) {
                return std::tie(a.cls, a.target) < std::tie(b.cls, b.target);
              });
  }
  return all;
}

void LatticeAutomaton::delete_state(StateId q) {
  Node& victim = node(q);
  for (const auto& [src, count] : victim.preds) {
    if (src == q)
      continue;
    for (auto& edges : nodes_.at(src).out) {
      const auto before = edges.size();
      std::erase_if(edges, [q](const Edge& e) { return e.target == q; });
      transition_count_ -= before - edges.size();
    }
  }
  for (const auto& edges : victim.out) {
    for (const auto& e : edges) {
      --transition_count_;
      if (e.target == q)
        continue;
      auto& preds = nodes_.at(e.target).preds;
      if (--preds[q] == 0)
        preds.erase(q);
    }
  }
  initial_.erase(q);
  final_.erase(q);
  nodes_.erase(q);
}

std::vector<StateId> LatticeAutomaton::successors(std::span<const StateId> from,
                                                  std::span<const double> letter) const {
  if (letter.size() != dim_)
    throw DimensionMismatch("letter of dimension " + std::to_string(letter.size()) +
                            " for an automaton of dimension " + std::to_string(dim_));
  const std::size_t cls = partition_.class_of(letter);
  std::vector<StateId> next;
  for (StateId q : from)
    for (const auto& e : node(q).out[cls])
      if (e.label.contains(letter))
        next.push_back(e.target);
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

bool LatticeAutomaton::accepts(std::span<const Letter> word) const {
  for (const auto& letter : word)
    if (letter.size() != dim_)
      throw DimensionMismatch("letter of dimension " + std::to_string(letter.size()) +
                              " for an automaton of dimension " + std::to_string(dim_));
  std::vector<StateId> current(initial_.begin(), initial_.end());
  for (const auto& letter : word) {
    if (current.empty())
      break;
    current = successors(current, letter);
  }
  return std::any_of(current.begin(), current.end(),
                     [this](StateId q) { return final_.contains(q); });
}

bool operator==(const LatticeAutomaton& a, const LatticeAutomaton& b) {
  if (a.dim_ != b.dim_ || !(a.partition_ == b.partition_) || a.initial_ != b.initial_ ||
      a.final_ != b.final_ || a.nodes_.size() != b.nodes_.size())
    return false;
  for (auto ia = a.nodes_.begin(), ib = b.nodes_.begin(); ia != a.nodes_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second.gamma == ib->second.gamma))
      return false;
  return a.transitions() == b.transitions();
}

} // namespace ila
