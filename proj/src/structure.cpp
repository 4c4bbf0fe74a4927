#include "nimgen/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nimgen {

namespace {
constexpr int kNimComponentCap = 1000;
}

const char* game_name(GameKind k) { return k == GameKind::Avoid ? "DNG" : "GEN"; }
const char* game_token(GameKind k) { return k == GameKind::Avoid ? "dng" : "gen"; }

std::string TypeTriple::to_string() const {
  std::ostringstream out;
  out << '(' << parity << ',' << even_nim << ',' << odd_nim << ')';
  return out.str();
}

int mex(const std::vector<int>& values) {
  std::vector<char> present(values.size() + 1, 0);
  for (int v : values)
    if (v >= 0 && v <= static_cast<int>(values.size())) present[v] = 1;
  int m = 0;
  while (present[m]) ++m;
  return m;
}

bool has_arrow(const IntersectionLattice& lattice, int i, int j) {
  if (i == j)
    throw std::invalid_argument("has_arrow requires distinct classes");
  if (!lattice.leq(i, j)) return false;
  const ElementSet& target = lattice.nodes()[j].elements();
  // nodes containing I but not J
  ElementSet kset = lattice.supersets(i) - lattice.supersets(j);
  ElementSet cover(target.universe());
  for (int k = kset.next_member(0); k >= 0; k = kset.next_member(k + 1)) {
    cover |= lattice.nodes()[k].elements() & target;
    if (cover == target) return false;
  }
  return cover != target;
}

bool semi_terminal(const IntersectionLattice& lattice, const ElementSet& members) {
  const int n = lattice.group().order();
  ElementSet cover(n);
  for (const Subgroup& m : lattice.maximal_subgroups())
    if (members.is_subset_of(m.elements())) cover |= m.elements();
  return cover.size() != n;
}

bool semi_terminal(const IntersectionLattice& lattice, int i) {
  return semi_terminal(lattice, lattice.nodes()[i].elements());
}

StructureDigraph::StructureDigraph(IntersectionLattice lattice, GameKind game)
    : lattice_(std::move(lattice)), game_(game) {
  const int nodes = lattice_.node_count();
  const int classes = nodes + (game_ == GameKind::Achieve ? 1 : 0);
  adjacency_.assign(classes, {});
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j)
      if (i != j && has_arrow(lattice_, i, j)) adjacency_[i].push_back(j);
    if (game_ == GameKind::Achieve && semi_terminal(lattice_, i))
      adjacency_[i].push_back(terminal_gen_class());
  }

  // arrows go to strictly larger subgroups, so the digraph must be acyclic
  // with the Frattini class as the unique source among lattice classes
  std::vector<int> indegree(classes, 0);
  for (int c = 0; c < classes; ++c)
    for (int t : adjacency_[c]) ++indegree[t];
  std::vector<int> remaining = indegree;
  std::vector<int> order;
  order.reserve(classes);
  for (int c = 0; c < classes; ++c)
    if (remaining[c] == 0) order.push_back(c);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int t : adjacency_[order[head]])
      if (--remaining[t] == 0) order.push_back(t);
  if (static_cast<int>(order.size()) != classes)
    throw ValidationError("structure digraph contains a cycle");
  for (int c = 0; c < classes; ++c) {
    bool should_be_source = c == lattice_.frattini_index();
    if ((indegree[c] == 0) != should_be_source)
      throw ValidationError("the Frattini class is not the unique source");
  }
}

int StructureDigraph::edge_count() const {
  int total = 0;
  for (const auto& adj : adjacency_) total += static_cast<int>(adj.size());
  return total;
}

int StructureDigraph::class_parity(int c) const {
  if (is_terminal_gen_class(c)) return lattice_.group().order() % 2;
  return lattice_.parity(c);
}

int StructureDigraph::class_subgroup_order(int c) const {
  if (is_terminal_gen_class(c)) return lattice_.group().order();
  return lattice_.nodes()[c].order();
}

std::vector<TypeTriple> StructureDigraph::full_otype_of(int c) const {
  std::vector<TypeTriple> full = otypes_[c];
  full.push_back(types_[c]);
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());
  return full;
}

int StructureDigraph::start_nim() const {
  if (!types_computed_) throw ValidationError("types not computed");
  // the empty start position is even and lies in the Frattini class
  return types_[frattini_class()].even_nim;
}

StructureDigraph build_structure_digraph(IntersectionLattice lattice, GameKind game) {
  return StructureDigraph(std::move(lattice), game);
}

TypeTriple combine_option_types(int parity, const std::vector<TypeTriple>& otype) {
  std::vector<int> even_nims, odd_nims;
  even_nims.reserve(otype.size());
  odd_nims.reserve(otype.size());
  for (const TypeTriple& t : otype) {
    even_nims.push_back(t.even_nim);
    odd_nims.push_back(t.odd_nim);
  }
  TypeTriple result;
  result.parity = parity;
  // Moves inside the class flip parity, so the nim of the class's own
  // opposite-parity positions joins the inner mex. With no options this
  // yields (1,1,0) / (0,0,1), the terminal class types.
  if (parity == 1) {
    result.odd_nim = mex(even_nims);
    odd_nims.push_back(result.odd_nim);
    result.even_nim = mex(odd_nims);
  } else {
    result.even_nim = mex(odd_nims);
    even_nims.push_back(result.even_nim);
    result.odd_nim = mex(even_nims);
  }
  if (result.even_nim > kNimComponentCap || result.odd_nim > kNimComponentCap)
    throw ValidationError("nim component exceeds sanity cap; computation is broken");
  return result;
}

void compute_types(StructureDigraph& d) {
  const int classes = d.class_count();
  d.types_.assign(classes, {});
  d.otypes_.assign(classes, {});
  std::vector<char> done(classes, 0);

  if (d.has_terminal_gen_class()) {
    int t = d.terminal_gen_class();
    d.types_[t] = TypeTriple{d.lattice().group().order() % 2, 0, 0};
    done[t] = 1;
  }

  // lattice nodes are sorted by |I| and arrows go to strictly larger
  // subgroups, so decreasing node index is a reverse topological order
  for (int c = d.lattice_class_count() - 1; c >= 0; --c) {
    std::vector<TypeTriple> otype;
    for (int t : d.options_of(c)) {
      if (!done[t]) throw ValidationError("option class typed out of order");
      otype.push_back(d.types_[t]);
    }
    std::sort(otype.begin(), otype.end());
    otype.erase(std::unique(otype.begin(), otype.end()), otype.end());
    d.types_[c] = combine_option_types(d.class_parity(c), otype);
    d.otypes_[c] = std::move(otype);
    done[c] = 1;
  }
  d.types_computed_ = true;

  if (d.game() == GameKind::Avoid) {
    static const TypeTriple allowed[] = {{0, 0, 1}, {1, 0, 1}, {1, 1, 0}, {1, 3, 2}};
    for (int c = 0; c < classes; ++c) {
      bool ok = false;
      for (const TypeTriple& t : allowed) ok = ok || d.types_[c] == t;
      if (!ok)
        throw ValidationError("avoidance class type " + d.types_[c].to_string() +
                              " is outside the known table");
    }
  }
}

StructureDigraph analyze_game(const FiniteGroup& g,
                              const std::vector<Subgroup>& maximals, GameKind game) {
  StructureDigraph d(IntersectionLattice(g, maximals), game);
  compute_types(d);
  return d;
}

StructureDigraph analyze_game(const FiniteGroup& g, GameKind game) {
  if (g.order() == 1) {
    if (game == GameKind::Avoid)
      throw UnplayableGameError("DNG on the trivial group has no legal opening");
    throw TrivialGroupError("GEN on the trivial group has no structure digraph");
  }
  return analyze_game(g, maximal_subgroups(g), game);
}

int game_nim(const FiniteGroup& g, GameKind game) {
  if (g.order() == 1) {
    if (game == GameKind::Avoid)
      throw UnplayableGameError("DNG on the trivial group has no legal opening");
    return 0;  // the empty position already generates; the second player wins
  }
  return analyze_game(g, game).start_nim();
}

SimplifiedDiagram simplify(const StructureDigraph& d) {
  if (!d.types_computed()) throw ValidationError("types not computed");
  SimplifiedDiagram out;
  out.game = d.game();

  // merge key: (type, full option type); the terminal generating class
  // stays its own node
  std::map<std::pair<std::vector<TypeTriple>, bool>, int> group_of_key;
  std::vector<int> group_of_class(d.class_count(), -1);
  for (int c = 0; c < d.class_count(); ++c) {
    std::vector<TypeTriple> key;
    key.push_back(d.type_of(c));
    auto full = d.full_otype_of(c);
    key.insert(key.end(), full.begin(), full.end());
    bool terminal = d.is_terminal_gen_class(c);
    auto [it, fresh] = group_of_key.try_emplace({std::move(key), terminal},
                                                static_cast<int>(out.groups.size()));
    if (fresh) {
      out.groups.emplace_back();
      out.types.push_back(d.type_of(c));
      out.otypes.push_back(full);
      out.rep_subgroup_order.push_back(d.class_subgroup_order(c));
      out.terminal_gen_group.push_back(terminal ? 1 : 0);
    }
    group_of_class[c] = it->second;
    out.groups[it->second].push_back(c);
  }

  out.multiplicity.resize(out.groups.size());
  for (std::size_t k = 0; k < out.groups.size(); ++k)
    out.multiplicity[k] = static_cast<int>(out.groups[k].size());

  out.edges.assign(out.groups.size(), {});
  for (int c = 0; c < d.class_count(); ++c)
    for (int t : d.options_of(c)) {
      int from = group_of_class[c], to = group_of_class[t];
      if (from != to) out.edges[from].push_back(to);  // drop self-loops
    }
  for (auto& adj : out.edges) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  // a directed cycle among merged nodes would be a genuine finding
  std::vector<int> indegree(out.groups.size(), 0);
  for (const auto& adj : out.edges)
    for (int t : adj) ++indegree[t];
  std::vector<int> order;
  for (std::size_t k = 0; k < out.groups.size(); ++k)
    if (indegree[k] == 0) order.push_back(static_cast<int>(k));
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int t : out.edges[order[head]])
      if (--indegree[t] == 0) order.push_back(t);
  out.has_directed_cycle = order.size() != out.groups.size();
  return out;
}

namespace {

void dot_header(std::ostringstream& out, GameKind game) {
  out << "digraph " << game_token(game) << "_structure {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
}

std::string node_label(int subgroup_order, const TypeTriple& t, bool terminal_gen) {
  std::ostringstream out;
  if (terminal_gen)
    out << "GEN-terminal " << t.to_string();
  else
    out << "|I|=" << subgroup_order << " pty=" << t.parity << " type=" << t.to_string();
  return out.str();
}

}  // namespace

std::string export_dot(const StructureDigraph& d) {
  if (!d.types_computed()) throw ValidationError("types not computed");
  std::ostringstream out;
  dot_header(out, d.game());
  for (int c = 0; c < d.class_count(); ++c)
    out << "  n" << c << " [label=\""
        << node_label(d.class_subgroup_order(c), d.type_of(c),
                      d.is_terminal_gen_class(c))
        << "\"];\n";
  for (int c = 0; c < d.class_count(); ++c)
    for (int t : d.options_of(c)) out << "  n" << c << " -> n" << t << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const SimplifiedDiagram& s) {
  std::ostringstream out;
  dot_header(out, s.game);
  if (s.has_directed_cycle)
    out << "  // warning: directed cycle among merged classes\n";
  for (std::size_t k = 0; k < s.groups.size(); ++k) {
    out << "  n" << k << " [label=\""
        << node_label(s.rep_subgroup_order[k], s.types[k], s.terminal_gen_group[k] != 0);
    if (!s.terminal_gen_group[k]) out << " \xc3\x97" << s.multiplicity[k];
    out << "\"];\n";
  }
  for (std::size_t k = 0; k < s.groups.size(); ++k)
    for (int t : s.edges[k]) out << "  n" << k << " -> n" << t << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_nimber(int nim) { return "*" + std::to_string(nim); }

}  // namespace nimgen
