#include "nimgen/oracle.hpp"

#include <cstdlib>
#include <sstream>

namespace nimgen {

int oracle_cap_from_env() {
  const char* raw = std::getenv("NIMGEN_ORACLE_CAP");
  if (raw == nullptr) return kOracleDefaultCap;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) return kOracleDefaultCap;
  return static_cast<int>(std::min<long>(v, kOracleHardCap));
}

PositionTable::PositionTable(const FiniteGroup& g, GameKind game, int cap)
    : group_(g), game_(game) {
  const int n = g.order();
  if (n > kOracleHardCap)
    throw ResourceLimitError("oracle refuses groups above " +
                             std::to_string(kOracleHardCap) + " elements");
  if (n > cap)
    throw ResourceLimitError("group order " + std::to_string(n) +
                             " exceeds the oracle cap of " + std::to_string(cap));
  if (n == 1 && game == GameKind::Avoid)
    throw UnplayableGameError("DNG on the trivial group has no legal opening");
  full_mask_ = (std::uint32_t{1} << n) - 1;
  if (n > 1) {
    for (const Subgroup& m : maximal_subgroups(g)) {
      std::uint32_t mask = 0;
      m.elements().for_each([&](int i) { mask |= std::uint32_t{1} << i; });
      maximal_masks_.push_back(mask);
    }
  }
}

bool PositionTable::mask_generates(std::uint32_t mask) const {
  for (std::uint32_t m : maximal_masks_)
    if ((mask & ~m) == 0) return false;
  return true;  // contained in no maximal subgroup
}

int PositionTable::nim(const ElementSet& position) {
  std::uint32_t mask = 0;
  position.for_each([&](int i) { mask |= std::uint32_t{1} << i; });
  if (game_ == GameKind::Avoid && mask_generates(mask))
    throw ValidationError("avoidance positions must be non-generating");
  return nim_mask(mask, position.size());
}

int PositionTable::nim_mask(std::uint32_t mask, int mask_size) {
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;

  int value = 0;
  if (game_ == GameKind::Achieve && mask_generates(mask)) {
    value = 0;  // the move that completed generation ended the game
  } else {
    // every option adds exactly one element, flipping the parity
    std::vector<int> option_nims;
    if (game_ == GameKind::Avoid) {
      std::uint32_t reachable = 0;
      for (std::uint32_t m : maximal_masks_)
        if ((mask & ~m) == 0) reachable |= m;
      std::uint32_t candidates = reachable & ~mask;
      for (int g = 0; g < group_.order(); ++g)
        if (candidates & (std::uint32_t{1} << g))
          option_nims.push_back(nim_mask(mask | (std::uint32_t{1} << g), mask_size + 1));
    } else {
      std::uint32_t candidates = full_mask_ & ~mask;
      for (int g = 0; g < group_.order(); ++g)
        if (candidates & (std::uint32_t{1} << g))
          option_nims.push_back(nim_mask(mask | (std::uint32_t{1} << g), mask_size + 1));
    }
    value = mex(option_nims);
  }
  memo_.emplace(mask, value);
  return value;
}

int oracle_nim(const FiniteGroup& g, GameKind game, const ElementSet& position, int cap) {
  PositionTable table(g, game, cap);
  return table.nim(position);
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << game_name(game) << '(' << group_name << "): ";
  if (passed) {
    out << "ok, nim " << format_nimber(engine_nim) << ", " << positions_checked
        << " positions agree";
  } else {
    out << "MISMATCH (engine " << format_nimber(engine_nim) << ", oracle "
        << format_nimber(oracle_start_nim) << ", " << mismatches << " of "
        << positions_checked << " positions differ";
    if (!first_mismatch.empty()) out << "; first: " << first_mismatch;
    out << ')';
  }
  return out.str();
}

VerifyReport verify_group(const FiniteGroup& g, GameKind game,
                          const std::string& name, int cap) {
  VerifyReport report;
  report.group_name = name;
  report.game = game;

  if (g.order() == 1) {
    // GEN(Z1) = *0 and DNG(Z1) is unplayable; nothing to sweep
    if (game == GameKind::Avoid)
      throw UnplayableGameError("DNG on the trivial group has no legal opening");
    report.engine_nim = game_nim(g, game);
    report.oracle_start_nim = 0;
    report.positions_checked = 1;
    report.passed = report.engine_nim == 0;
    return report;
  }

  StructureDigraph digraph = analyze_game(g, game);
  report.engine_nim = digraph.start_nim();

  PositionTable oracle(g, game, cap);
  report.oracle_start_nim = oracle.nim(ElementSet(g.order()));

  if (report.oracle_start_nim != report.engine_nim) {
    ++report.mismatches;
    report.first_mismatch = "start position";
  }

  // every memoized position must match the parity component of its class
  for (const auto& [mask, oracle_value] : oracle.memo()) {
    ElementSet position(g.order());
    for (int i = 0; i < g.order(); ++i)
      if (mask & (std::uint32_t{1} << i)) position.insert(i);
    ClassRef cls = class_of(digraph.lattice(), position);
    const TypeTriple& type = cls.is_terminal_gen()
                                 ? digraph.type_of(digraph.terminal_gen_class())
                                 : digraph.type_of(cls.node);
    int expected = position.size() % 2 == 0 ? type.even_nim : type.odd_nim;
    ++report.positions_checked;
    if (expected != oracle_value) {
      ++report.mismatches;
      if (report.first_mismatch.empty()) {
        std::ostringstream what;
        what << "position {";
        bool first = true;
        position.for_each([&](int i) {
          if (!first) what << ',';
          what << g.label(i);
          first = false;
        });
        what << "} oracle " << oracle_value << " engine " << expected;
        report.first_mismatch = what.str();
      }
    }
  }
  report.passed = report.mismatches == 0;
  return report;
}

}  // namespace nimgen
