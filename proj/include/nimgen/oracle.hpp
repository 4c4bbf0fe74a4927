#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "nimgen/structure.hpp"

namespace nimgen {

// Brute-force Sprague-Grundy evaluation over actual game positions.
// Independent of the structure engine by construction: it only uses the
// maximal subgroups and the raw mex recursion.
inline constexpr int kOracleDefaultCap = 16;
inline constexpr int kOracleHardCap = 24;

// NIMGEN_ORACLE_CAP overrides the default (clamped to the hard cap).
int oracle_cap_from_env();

// Memoized nim values for one (group, game) pair, keyed by element bit-mask.
class PositionTable {
public:
  PositionTable(const FiniteGroup& g, GameKind game, int cap = oracle_cap_from_env());

  int nim(const ElementSet& position);
  const std::unordered_map<std::uint32_t, int>& memo() const { return memo_; }
  GameKind game() const { return game_; }

private:
  int nim_mask(std::uint32_t mask, int mask_size);
  bool mask_generates(std::uint32_t mask) const;

  const FiniteGroup& group_;
  GameKind game_;
  std::vector<std::uint32_t> maximal_masks_;
  std::uint32_t full_mask_;
  std::unordered_map<std::uint32_t, int> memo_;
};

int oracle_nim(const FiniteGroup& g, GameKind game, const ElementSet& position,
               int cap = oracle_cap_from_env());

struct VerifyReport {
  std::string group_name;
  GameKind game = GameKind::Avoid;
  int engine_nim = -1;
  int oracle_start_nim = -1;
  std::size_t positions_checked = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  bool passed = false;

  std::string summary() const;
};

// Compares the engine against the oracle at the start position and at
// every memoized position (parity-appropriate type component of the
// position's structure class).
VerifyReport verify_group(const FiniteGroup& g, GameKind game,
                          const std::string& name = "group",
                          int cap = oracle_cap_from_env());

}  // namespace nimgen
