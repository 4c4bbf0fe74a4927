#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nimgen/structure.hpp"

namespace nimgen {

// carry-free binary addition of nim values
int nim_sum(int a, int b);

// Number of invariant factors of the abelian group with the given
// elementary divisors (prime powers >= 2): the maximum multiplicity of a
// prime among the entries. The empty list is the trivial group, spread 0.
int spread(const std::vector<long long>& elementary_divisors);

enum class Family { Cyclic, Dihedral, Abelian, Symmetric, Alternating };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilyParams {
  Family family = Family::Cyclic;
  GameKind game = GameKind::Avoid;
  int n = 0;                               // Z_n, D_n, S_n, A_n
  std::vector<long long> divisors;         // abelian: elementary divisors
};

// Closed-form nim value where one is known; nullopt where only a
// conjecture exists (DNG(A_n) and GEN(S_n)/GEN(A_n) for n >= 9).
// Throws std::invalid_argument for parameters outside the family
// (including the unplayable DNG on a trivial group).
std::optional<int> predict_nim(const FamilyParams& params);

}  // namespace nimgen
