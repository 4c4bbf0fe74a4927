#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nimgen/element_set.hpp"
#include "nimgen/errors.hpp"

namespace nimgen {

// Associativity is checked exhaustively up to this order and on
// 10*n^2 deterministically sampled triples above it.
inline constexpr int kFullAssociativityLimit = 256;

// Finite group as an explicit Cayley table. Immutable after construction;
// safe to share across threads.
class FiniteGroup {
public:
  // Validates the full set of group axioms (Latin square, identity,
  // inverses, associativity) and throws ValidationError on failure.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverses_[a]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int element_order(int i) const;
  std::vector<int> element_order_multiset() const;  // sorted ascending

private:
  friend FiniteGroup make_group_unchecked(int, std::vector<std::uint16_t>,
                                          std::vector<std::string>);
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> table_;  // row-major, order_ x order_
  std::vector<std::uint16_t> inverses_;
  std::vector<std::string> labels_;
};

// Internal constructor for the builders, which produce tables that are
// correct by construction. Still derives identity/inverses and checks
// the cheap axioms.
FiniteGroup make_group_unchecked(int order, std::vector<std::uint16_t> table,
                                 std::vector<std::string> labels);

// Subset of a group closed under the operation, containing the identity.
// The constructor verifies closure, identity membership and Lagrange.
class Subgroup {
public:
  Subgroup(const FiniteGroup& g, ElementSet members);

  const ElementSet& elements() const { return elems_; }
  int order() const { return elems_.size(); }
  bool contains(int i) const { return elems_.contains(i); }

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }

private:
  ElementSet elems_;
};

// Smallest subgroup containing seed. The empty seed yields the trivial
// subgroup. Total over all inputs.
Subgroup closure(const FiniteGroup& g, const ElementSet& seed);
ElementSet closure_set(const FiniteGroup& g, const ElementSet& seed);

struct SubgroupEnumLimits {
  int max_subgroups = 100000;
};

// Complete, duplicate-free list of subgroups, canonically ordered by
// (size, member order). Throws ResourceLimitError past the cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    const SubgroupEnumLimits& limits = {});

// Proper subgroups maximal under inclusion, canonical order.
// Throws TrivialGroupError for |G| = 1.
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g);
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g,
                                        const std::vector<Subgroup>& all);

// S generates G iff no maximal subgroup contains S. For |G| = 1 every
// subset (including the empty one) generates.
bool is_generating(const FiniteGroup& g, const std::vector<Subgroup>& maximals,
                   const ElementSet& s);
bool is_generating(const FiniteGroup& g, const ElementSet& s);

}  // namespace nimgen
