#ifndef ILA_AUTOMATON_HPP
#define ILA_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "ila/lattice.hpp"

namespace ila {

using StateId = std::uint32_t;
using Letter = std::vector<double>;
using Word = std::vector<Letter>;

struct Edge {
  Box label;
  StateId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Transition {
  StateId source;
  std::size_t cls;
  Box label;
  StateId target;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Interval lattice automaton: finite automaton over R^d whose transitions
/// carry boxes, each box confined to one class of a finite partition.
///
/// Two structural properties hold at all times:
///  - every label lies inside a single partition class;
///  - between two states there is at most one transition per class.
/// Several same-class transitions from one source to *different* targets
/// are allowed, so the automaton may be nondeterministic.
///
/// Every state also carries a box Gamma (possibly bottom) over-approximating
/// the hidden vectors observed at that state; it plays no part in the
/// recognized language.
class LatticeAutomaton {
public:
  LatticeAutomaton(std::size_t dim, Partition partition);

  std::size_t dim() const noexcept { return dim_; }
  const Partition& partition() const noexcept { return partition_; }

  /// Creates a state with the next free id.
  StateId add_state(Box gamma = Box::bottom());
  /// Creates a state with a given id, used when loading from a file.
  void add_state(StateId id, Box gamma);

  bool has_state(StateId q) const { return nodes_.contains(q); }
  std::size_t state_count() const noexcept { return nodes_.size(); }
  std::size_t transition_count() const noexcept { return transition_count_; }
  std::vector<StateId> states() const;
  StateId next_id() const noexcept { return next_id_; }

  const std::set<StateId>& initial() const noexcept { return initial_; }
  const std::set<StateId>& final_states() const noexcept { return final_; }
  bool is_initial(StateId q) const { return initial_.contains(q); }
  bool is_final(StateId q) const { return final_.contains(q); }
  void set_initial(StateId q, bool on = true);
  void set_final(StateId q, bool on = true);

  const Box& gamma(StateId q) const { return node(q).gamma; }
  void set_gamma(StateId q, Box g);
  void join_gamma(StateId q, const Box& g);

  /// Adds (q, label, q2). When a transition q -> q2 of the same class
  /// already exists its label becomes the join of both labels.
  void add_transition(StateId q, const Box& label, StateId q2);

  /// Outgoing transitions of q restricted to partition class cls.
  const std::vector<Edge>& out(StateId q, std::size_t cls) const;
  /// Sources of transitions entering q (each listed once).
  std::vector<StateId> predecessors(StateId q) const;
  std::size_t out_degree(StateId q) const;
  std::size_t in_degree(StateId q) const;

  /// All transitions, ordered by (source, class, target).
  std::vector<Transition> transitions() const;

  /// Removes q together with every transition incident to it.
  void delete_state(StateId q);

  /// States reachable from `from` by reading one letter.
  std::vector<StateId> successors(std::span<const StateId> from, std::span<const double> letter) const;

  /// Membership by simulating the set of reachable states.
  bool accepts(std::span<const Letter> word) const;

  friend bool operator==(const LatticeAutomaton& a, const LatticeAutomaton& b);

private:
  struct Node {
    Box gamma;
    std::vector<std::vector<Edge>> out; // indexed by class
    std::map<StateId, std::size_t> preds; // source -> number of transitions
  };

  const Node& node(StateId q) const;
  Node& node(StateId q);

  std::size_t dim_;
  Partition partition_;
  std::map<StateId, Node> nodes_;
  std::set<StateId> initial_;
  std::set<StateId> final_;
  std::size_t transition_count_ = 0;
  StateId next_id_ = 0;
};

} // namespace ila

#endif
