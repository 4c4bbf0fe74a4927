#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nimgen/families.hpp"

namespace nimgen {

struct CatalogOptions {
  int max_order = 24;
  std::vector<Family> families = {Family::Cyclic, Family::Dihedral, Family::Abelian,
                                  Family::Symmetric, Family::Alternating};
  int jobs = 1;  // independent groups may be evaluated in parallel
};

struct CatalogRow {
  std::string group_spec;
  int order = 0;
  GameKind game = GameKind::Avoid;
  std::optional<int> nim;        // empty on evaluation error
  std::optional<int> predicted;  // empty where only a conjecture exists
  enum class Match { Yes, No, Unknown, Error } match = Match::Unknown;
  std::string error;
  double wall_ms = 0.0;
};

// Deterministic row order: family, order, spec text, game.
std::vector<CatalogRow> run_catalog(const CatalogOptions& options);

// header: group_spec,order,game,nim,predicted,match_flag,wall_ms
void write_catalog_csv(std::ostream& out, const std::vector<CatalogRow>& rows);
std::string catalog_csv(const std::vector<CatalogRow>& rows);

bool catalog_has_mismatch(const std::vector<CatalogRow>& rows);

// Group description with its family parameters, used by catalog and the
// verify sweep. Spec strings build real groups via the group_builders
// grammar.
struct FamilyMember {
  Family family;
  std::string spec;
  int order;
  int n = 0;
  std::vector<long long> divisors;
};

// All constructor-expressible members of the family with order in
// [2, max_order]; abelian groups are enumerated by elementary-divisor
// multisets (one member per isomorphism class).
std::vector<FamilyMember> enumerate_family(Family family, int max_order);

}  // namespace nimgen
