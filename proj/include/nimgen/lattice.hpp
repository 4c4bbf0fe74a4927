#pragma once

#include <unordered_map>
#include <vector>

#include "nimgen/group.hpp"

namespace nimgen {

// Refers either to the structure class of a lattice node or, for the
// achievement game, to the terminal class of fresh generating sets.
struct ClassRef {
  static constexpr int kTerminalGen = -1;
  int node = kTerminalGen;

  static ClassRef lattice(int index) { return ClassRef{index}; }
  static ClassRef terminal_gen() { return ClassRef{kTerminalGen}; }
  bool is_terminal_gen() const { return node == kTerminalGen; }
  bool operator==(const ClassRef& o) const { return node == o.node; }
};

// All intersections of non-empty families of maximal subgroups, with the
// containment order. node 0-based indices are canonical: sorted by
// (size, member order). Immutable after construction.
class IntersectionLattice {
public:
  IntersectionLattice(FiniteGroup group, std::vector<Subgroup> maximals);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Subgroup>& nodes() const { return nodes_; }
  const std::vector<Subgroup>& maximal_subgroups() const { return maximals_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  bool is_maximal(int i) const { return maximal_flag_[i]; }
  // containment: nodes[i] subseteq nodes[j]
  bool leq(int i, int j) const { return supersets_[i].contains(j); }
  // node-index bitset of all j with nodes[i] subseteq nodes[j]
  const ElementSet& supersets(int i) const { return supersets_[i]; }

  int frattini_index() const { return frattini_; }
  const Subgroup& frattini_node() const { return nodes_[frattini_]; }

  int parity(int i) const { return nodes_[i].order() % 2; }  // pty(|I|)

  // index of the node with this exact member set, or -1
  int find_node(const ElementSet& members) const;

private:
  FiniteGroup group_;
  std::vector<Subgroup> nodes_;
  std::vector<Subgroup> maximals_;
  std::vector<bool> maximal_flag_;
  std::vector<ElementSet> supersets_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
  int frattini_ = 0;
};

// Closure of the maximal subgroups under pairwise intersection.
// Throws TrivialGroupError for |G| = 1.
IntersectionLattice intersection_subgroups(const FiniteGroup& g);
IntersectionLattice intersection_subgroups(FiniteGroup g, std::vector<Subgroup> maximals);

// The minimum node: intersection of all maximal subgroups.
const Subgroup& frattini(const IntersectionLattice& lattice);
const Subgroup& frattini(IntersectionLattice&&) = delete;  // would dangle

// The subseteq-minimum node containing p, or the terminal generating class
// when no node contains p.
ClassRef class_of(const IntersectionLattice& lattice, const ElementSet& p);

}  // namespace nimgen
