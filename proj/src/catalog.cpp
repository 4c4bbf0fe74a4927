#include "nimgen/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "nimgen/builders.hpp"

namespace nimgen {

namespace {

std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

// partitions of the exponent e, each part becoming one elementary divisor p^part
void exponent_partitions(int e, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    exponent_partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

std::string divisors_spec(const std::vector<long long>& divisors) {
  std::string out;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z' + std::to_string(divisors[i]);
  }
  return out;
}

// one elementary-divisor multiset per abelian isomorphism class of order n
std::vector<std::vector<long long>> abelian_divisor_lists(long long n) {
  std::vector<std::vector<long long>> lists = {{}};
  long long rest = n;
  for (long long p : primes_up_to(n)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    exponent_partitions(e, e, cur, partitions);
    std::vector<std::vector<long long>> next;
    for (const auto& base : lists)
      for (const auto& partition : partitions) {
        auto extended = base;
        for (int part : partition) {
          long long q = 1;
          for (int i = 0; i < part; ++i) q *= p;
          extended.push_back(q);
        }
        next.push_back(std::move(extended));
      }
    lists = std::move(next);
    if (rest == 1) break;
  }
  for (auto& l : lists) std::sort(l.begin(), l.end());
  std::sort(lists.begin(), lists.end());
  return lists;
}

}  // namespace

std::vector<FamilyMember> enumerate_family(Family family, int max_order) {
  std::vector<FamilyMember> out;
  switch (family) {
    case Family::Cyclic:
      for (int n = 2; n <= max_order; ++n)
        out.push_back({family, "Z" + std::to_string(n), n, n, {}});
      break;
    case Family::Dihedral:
      for (int n = 2; 2 * n <= max_order; ++n)
        out.push_back({family, "D" + std::to_string(n), 2 * n, n, {}});
      break;
    case Family::Abelian:
      for (int order = 2; order <= max_order; ++order)
        for (const auto& divisors : abelian_divisor_lists(order))
          out.push_back({family, divisors_spec(divisors), order, 0, divisors});
      break;
    case Family::Symmetric: {
      long long fact = 1;
      for (int n = 2; (fact *= n) <= max_order; ++n)
        out.push_back({family, "S" + std::to_string(n), static_cast<int>(fact), n, {}});
      break;
    }
    case Family::Alternating: {
      long long fact = 2;
      for (int n = 3; (fact *= n) / 2 <= max_order; ++n)
        out.push_back({family, "A" + std::to_string(n), static_cast<int>(fact / 2), n, {}});
      break;
    }
  }
  return out;
}

namespace {

struct GroupResult {
  std::optional<int> dng, gen;
  std::string error;
  double wall_ms = 0.0;
};

GroupResult evaluate_member(const FamilyMember& member) {
  GroupResult result;
  auto start = std::chrono::steady_clock::now();
  try {
    FiniteGroup g = build_group(member.spec);
    std::vector<Subgroup> maximals = maximal_subgroups(g);
    result.dng = analyze_game(g, maximals, GameKind::Avoid).start_nim();
    result.gen = analyze_game(g, maximals, GameKind::Achieve).start_nim();
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), ',', ';');
    result.error = what;
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::optional<int> predict_member(const FamilyMember& member, GameKind game) {
  FamilyParams params;
  params.family = member.family;
  params.game = game;
  params.n = member.n;
  params.divisors = member.divisors;
  return predict_nim(params);
}

}  // namespace

std::vector<CatalogRow> run_catalog(const CatalogOptions& options) {
  std::vector<FamilyMember> members;
  for (Family f : {Family::Cyclic, Family::Dihedral, Family::Abelian,
                   Family::Symmetric, Family::Alternating}) {
    if (std::find(options.families.begin(), options.families.end(), f) ==
        options.families.end())
      continue;
    auto part = enumerate_family(f, options.max_order);
    members.insert(members.end(), part.begin(), part.end());
  }

  // evaluate in parallel, then emit rows in the deterministic member order
  std::vector<GroupResult> results(members.size());
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < members.size(); ++i)
      results[i] = evaluate_member(members[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= members.size()) return;
        results[i] = evaluate_member(members[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CatalogRow> rows;
  rows.reserve(members.size() * 2);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (GameKind game : {GameKind::Avoid, GameKind::Achieve}) {
      CatalogRow row;
      row.group_spec = members[i].spec;
      row.order = members[i].order;
      row.game = game;
      row.wall_ms = results[i].wall_ms;
      row.nim = game == GameKind::Avoid ? results[i].dng : results[i].gen;
      row.predicted = predict_member(members[i], game);
      if (!results[i].error.empty()) {
        row.match = CatalogRow::Match::Error;
        row.error = results[i].error;
      } else if (!row.predicted.has_value()) {
        row.match = CatalogRow::Match::Unknown;
      } else {
        row.match = *row.nim == *row.predicted ? CatalogRow::Match::Yes
                                               : CatalogRow::Match::No;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_catalog_csv(std::ostream& out, const std::vector<CatalogRow>& rows) {
  out << "group_spec,order,game,nim,predicted,match_flag,wall_ms\n";
  for (const CatalogRow& row : rows) {
    out << row.group_spec << ',' << row.order << ',' << game_token(row.game) << ',';
    if (row.nim) out << *row.nim;
    out << ',';
    if (row.predicted) out << *row.predicted;
    out << ',';
    switch (row.match) {
      case CatalogRow::Match::Yes: out << "true"; break;
      case CatalogRow::Match::No: out << "false"; break;
      case CatalogRow::Match::Unknown: out << "unknown"; break;
      case CatalogRow::Match::Error: out << "error:" << row.error; break;
    }
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", row.wall_ms);
    out << ',' << ms << '\n';
  }
}

std::string catalog_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream out;
  write_catalog_csv(out, rows);
  return out.str();
}

bool catalog_has_mismatch(const std::vector<CatalogRow>& rows) {
  for (const CatalogRow& row : rows)
    if (row.match == CatalogRow::Match::No || row.match == CatalogRow::Match::Error)
      return true;
  return false;
}

}  // namespace nimgen
