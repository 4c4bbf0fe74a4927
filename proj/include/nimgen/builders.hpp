#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nimgen/group.hpp"

namespace nimgen {

// Abstract syntax for the group-spec language:
//   Z<n> | D<n> | S<n> | A<n>       (case-insensitive)
//   spec x spec x ...               direct products
//   perm:(1 2 3)(4 5),(1 2)        permutation generators, 1-based cycles
//   cayley:<path>                   JSON Cayley table (consumes rest of spec)
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Product, Perm, CayleyFile };

  Kind kind;
  int n = 0;                                       // Cyclic/Dihedral/Symmetric/Alternating
  std::vector<GroupSpec> factors;                  // Product
  std::vector<std::vector<std::vector<int>>> generators;  // Perm: gen -> cycles -> 1-based points
  std::string path;                                // CayleyFile

  std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

struct BuildLimits {
  int max_order = 10000;
  int max_perm_points = 16;
};

FiniteGroup build(const GroupSpec& spec, const BuildLimits& limits = {});
FiniteGroup build_group(const std::string& spec_text, const BuildLimits& limits = {});

// Direct constructors for the families.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 2
FiniteGroup symmetric_group(int n, const BuildLimits& limits = {});
FiniteGroup alternating_group(int n, const BuildLimits& limits = {});

// Componentwise product on index pairs; pair (i, j) gets index i*|H| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const BuildLimits& limits = {});

// JSON object {"order": n, "table": [[int;n];n], "labels": [string;n]?}.
// The loader relabels elements so that the identity gets index 0.
FiniteGroup load_cayley_file(const std::string& path);
FiniteGroup load_cayley_json(const std::string& json_text);

}  // namespace nimgen
