#include "nimgen/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace nimgen {

IntersectionLattice::IntersectionLattice(FiniteGroup group, std::vector<Subgroup> maximals)
    : group_(std::move(group)), maximals_(std::move(maximals)) {
  if (group_.order() <= 1)
    throw TrivialGroupError("the trivial group has no intersection subgroups");

  // fixed point of pairwise intersection, starting from the maximals
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<ElementSet> worklist;
  for (const Subgroup& m : maximals_) {
    if (known.insert(m.elements()).second) worklist.push_back(m.elements());
  }
  std::vector<ElementSet> all(known.begin(), known.end());
  while (!worklist.empty()) {
    ElementSet cur = worklist.back();
    worklist.pop_back();
    std::size_t stable = all.size();
    for (std::size_t i = 0; i < stable; ++i) {
      ElementSet meet = cur & all[i];
      if (known.insert(meet).second) {
        all.push_back(meet);
        worklist.push_back(meet);
      }
    }
  }

  std::sort(all.begin(), all.end(), canonical_less);
  nodes_.reserve(all.size());
  for (auto& s : all) nodes_.emplace_back(group_, std::move(s));

  const int count = node_count();
  index_.reserve(count);
  for (int i = 0; i < count; ++i) index_[nodes_[i].elements()] = i;

  maximal_flag_.assign(count, false);
  for (const Subgroup& m : maximals_) {
    auto it = index_.find(m.elements());
    if (it == index_.end())
      throw ValidationError("maximal subgroup missing from intersection lattice");
    maximal_flag_[it->second] = true;
  }

  supersets_.assign(count, ElementSet(count));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (nodes_[i].elements().is_subset_of(nodes_[j].elements()))
        supersets_[i].insert(j);

  // nodes are sorted by size, so the minimum (= intersection of all
  // maximals) can only be node 0; verify it is below everything
  frattini_ = 0;
  if (supersets_[0].size() != count)
    throw ValidationError("intersection lattice has no minimum node");
}

int IntersectionLattice::find_node(const ElementSet& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

IntersectionLattice intersection_subgroups(FiniteGroup g, std::vector<Subgroup> maximals) {
  return IntersectionLattice(std::move(g), std::move(maximals));
}

IntersectionLattice intersection_subgroups(const FiniteGroup& g) {
  if (g.order() <= 1)
    throw TrivialGroupError("the trivial group has no intersection subgroups");
  return IntersectionLattice(g, maximal_subgroups(g));
}

const Subgroup& frattini(const IntersectionLattice& lattice) {
  return lattice.frattini_node();
}

ClassRef class_of(const IntersectionLattice& lattice, const ElementSet& p) {
  const int count = lattice.node_count();
  ElementSet meet;
  bool found = false;
  for (int i = 0; i < count; ++i) {
    if (p.is_subset_of(lattice.nodes()[i].elements())) {
      if (!found) {
        meet = lattice.nodes()[i].elements();
        found = true;
      } else {
        meet &= lattice.nodes()[i].elements();
      }
    }
  }
  if (!found) return ClassRef::terminal_gen();
  int node = lattice.find_node(meet);
  if (node < 0)
    throw ValidationError("meet of containing nodes is not a lattice node");
  return ClassRef::lattice(node);
}

}  // namespace nimgen
