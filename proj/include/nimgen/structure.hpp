#pragma once

#include <string>
#include <vector>

#include "nimgen/lattice.hpp"

namespace nimgen {

enum class GameKind { Avoid, Achieve };  // DNG / GEN

const char* game_name(GameKind k);        // "DNG" / "GEN"
const char* game_token(GameKind k);       // "dng" / "gen"

// (parity of the class, nim of its even positions, nim of its odd positions)
struct TypeTriple {
  int parity = 0;
  int even_nim = 0;
  int odd_nim = 0;

  bool operator==(const TypeTriple& o) const {
    return parity == o.parity && even_nim == o.even_nim && odd_nim == o.odd_nim;
  }
  bool operator<(const TypeTriple& o) const {
    if (parity != o.parity) return parity < o.parity;
    if (even_nim != o.even_nim) return even_nim < o.even_nim;
    return odd_nim < o.odd_nim;
  }
  std::string to_string() const;  // "(p,e,o)"
};

int mex(const std::vector<int>& values);

// X_J is an option of X_I iff I < J and J is not covered by the nodes
// that contain I but not J. Requires i != j.
bool has_arrow(const IntersectionLattice& lattice, int i, int j);

// Some single element extends the set to one lying in no maximal
// subgroup, i.e. the union of the maximal subgroups containing it is not
// all of G. Defined for any position, used on lattice nodes.
bool semi_terminal(const IntersectionLattice& lattice, const ElementSet& members);
bool semi_terminal(const IntersectionLattice& lattice, int i);

// Structure digraph: one class per lattice node, plus the terminal
// generating class for the achievement game. Types are filled in by
// compute_types.
class StructureDigraph {
public:
  StructureDigraph(IntersectionLattice lattice, GameKind game);

  GameKind game() const { return game_; }
  const IntersectionLattice& lattice() const { return lattice_; }

  int class_count() const { return static_cast<int>(adjacency_.size()); }
  bool has_terminal_gen_class() const { return game_ == GameKind::Achieve; }
  int terminal_gen_class() const { return class_count() - 1; }  // Achieve only
  bool is_terminal_gen_class(int c) const {
    return has_terminal_gen_class() && c == terminal_gen_class();
  }
  int lattice_class_count() const { return lattice_.node_count(); }

  const std::vector<int>& options_of(int c) const { return adjacency_[c]; }
  int edge_count() const;
  int frattini_class() const { return lattice_.frattini_index(); }

  int class_parity(int c) const;
  int class_subgroup_order(int c) const;  // |I|; |G| for the terminal class

  bool types_computed() const { return types_computed_; }
  const TypeTriple& type_of(int c) const { return types_[c]; }
  const std::vector<TypeTriple>& otype_of(int c) const { return otypes_[c]; }
  std::vector<TypeTriple> full_otype_of(int c) const;  // otype + own type, sorted

  int start_nim() const;  // even component of the source class type

private:
  friend void compute_types(StructureDigraph& d);

  IntersectionLattice lattice_;
  GameKind game_;
  std::vector<std::vector<int>> adjacency_;  // sorted target class indices
  std::vector<TypeTriple> types_;
  std::vector<std::vector<TypeTriple>> otypes_;  // sorted, deduplicated
  bool types_computed_ = false;
};

StructureDigraph build_structure_digraph(IntersectionLattice lattice, GameKind game);

// One step of the structural induction: the type of a class with the
// given parity from the deduplicated types of its option classes.
TypeTriple combine_option_types(int parity, const std::vector<TypeTriple>& otype);

// Fills types in reverse topological order (options first).
void compute_types(StructureDigraph& d);

// Full pipeline. DNG on the trivial group is unplayable; GEN on the
// trivial group is *0 without a digraph.
int game_nim(const FiniteGroup& g, GameKind game);
StructureDigraph analyze_game(const FiniteGroup& g, GameKind game);
StructureDigraph analyze_game(const FiniteGroup& g,
                              const std::vector<Subgroup>& maximals, GameKind game);

// Quotient of the structure digraph by type equivalence (equal type and
// equal full option type), self-loops dropped.
struct SimplifiedDiagram {
  GameKind game = GameKind::Avoid;
  std::vector<std::vector<int>> groups;        // member class indices, sorted
  std::vector<TypeTriple> types;               // per merged node
  std::vector<std::vector<TypeTriple>> otypes; // full option type per merged node
  std::vector<int> multiplicity;               // = groups[k].size()
  std::vector<int> rep_subgroup_order;         // |I| of the representative
  std::vector<int> terminal_gen_group;         // singleton flag per merged node
  std::vector<std::vector<int>> edges;         // sorted adjacency between merged nodes
  bool has_directed_cycle = false;             // reported, never suppressed
};

SimplifiedDiagram simplify(const StructureDigraph& d);

std::string export_dot(const StructureDigraph& d);
std::string export_dot(const SimplifiedDiagram& s);

std::string format_nimber(int nim);  // "*n"

}  // namespace nimgen
