#include "nimgen/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nimgen {

int nim_sum(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("nim values are non-negative");
  return a ^ b;
}

namespace {

// smallest prime factor of a prime power, or 0
long long prime_power_base(long long v) {
  if (v < 2) return 0;
  long long p = 0;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return v;  // prime
  while (v % p == 0) v /= p;
  return v == 1 ? p : 0;
}

struct AbelianShape {
  long long order = 1;
  int spr = 0;
  std::vector<long long> even_divisors;  // powers of 2 among the entries
  int odd_spread = 0;
  bool cyclic() const { return spr <= 1; }
};

AbelianShape analyze_divisors(const std::vector<long long>& divisors) {
  AbelianShape shape;
  std::map<long long, int> multiplicity;
  std::map<long long, int> odd_multiplicity;
  for (long long v : divisors) {
    long long p = prime_power_base(v);
    if (p == 0)
      throw std::invalid_argument("elementary divisor " + std::to_string(v) +
                                  " is not a prime power >= 2");
    shape.order *= v;
    ++multiplicity[p];
    if (p == 2)
      shape.even_divisors.push_back(v);
    else
      ++odd_multiplicity[p];
  }
  for (const auto& [p, m] : multiplicity) shape.spr = std::max(shape.spr, m);
  for (const auto& [p, m] : odd_multiplicity)
    shape.odd_spread = std::max(shape.odd_spread, m);
  std::sort(shape.even_divisors.begin(), shape.even_divisors.end());
  return shape;
}

}  // namespace

int spread(const std::vector<long long>& elementary_divisors) {
  return analyze_divisors(elementary_divisors).spr;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Abelian: return "abelian";
    case Family::Symmetric: return "symmetric";
    case Family::Alternating: return "alternating";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Cyclic, Family::Dihedral, Family::Abelian,
                   Family::Symmetric, Family::Alternating})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

namespace {

int predict_cyclic(GameKind game, long long n) {
  if (n < 1) throw std::invalid_argument("cyclic family needs n >= 1");
  if (game == GameKind::Avoid) {
    if (n == 1) throw std::invalid_argument("DNG on the trivial group is unplayable");
    if (n % 2 == 1 || n == 2) return 1;
    return n % 4 == 0 ? 0 : 3;
  }
  if (n == 1) return 0;
  if (n == 2) return 2;
  if (n % 2 == 1) return 2;
  return n % 4 == 0 ? 1 : 4;
}

std::optional<int> predict_abelian(GameKind game, const std::vector<long long>& divisors) {
  AbelianShape shape = analyze_divisors(divisors);
  if (game == GameKind::Avoid) {
    if (shape.order == 1)
      throw std::invalid_argument("DNG on the trivial group is unplayable");
    if (shape.order % 2 == 1) return 1;
    if (shape.cyclic()) return predict_cyclic(game, shape.order);
    return 0;
  }
  if (shape.cyclic()) return predict_cyclic(game, shape.order);
  if (shape.order % 2 == 1) return shape.spr <= 2 ? 2 : 1;
  // even and non-cyclic: first player wins only with a 2-part of exactly
  // Z2 x Z2 and an odd part needing at most two cyclic factors
  if (shape.even_divisors == std::vector<long long>{2, 2} && shape.odd_spread <= 2)
    return 1;
  return 0;
}

int predict_dihedral(GameKind game, int n) {
  if (n < 2) throw std::invalid_argument("dihedral family needs n >= 2");
  if (game == GameKind::Avoid) return n % 2 == 1 ? 3 : 0;
  if (n == 2) return 1;  // D2 is the Klein group
  if (n % 2 == 1) return 3;
  return n % 4 == 0 ? 0 : 1;
}

std::optional<int> predict_symmetric(GameKind game, int n) {
  if (n < 1) throw std::invalid_argument("symmetric family needs n >= 1");
  if (game == GameKind::Avoid) {
    if (n == 1) throw std::invalid_argument("DNG on the trivial group is unplayable");
    if (n == 2) return 1;
    if (n == 3) return 3;
    return 0;
  }
  switch (n) {
    case 1: return 0;
    case 2: return 2;
    case 3: return 3;
    case 4: return 0;
    default: return n <= 8 ? std::optional<int>(1) : std::nullopt;
  }
}

std::optional<int> predict_alternating(GameKind game, int n) {
  if (n < 3) throw std::invalid_argument("alternating family needs n >= 3");
  if (game == GameKind::Avoid) {
    if (n == 3) return 1;  // A3 is cyclic of odd order
    if (n == 4) return 3;
    return n <= 8 ? std::optional<int>(0) : std::nullopt;
  }
  switch (n) {
    case 3: return 2;
    case 4: return 3;
    default: return n <= 8 ? std::optional<int>(1) : std::nullopt;
  }
}

}  // namespace

std::optional<int> predict_nim(const FamilyParams& params) {
  switch (params.family) {
    case Family::Cyclic: return predict_cyclic(params.game, params.n);
    case Family::Dihedral: return predict_dihedral(params.game, params.n);
    case Family::Abelian: return predict_abelian(params.game, params.divisors);
    case Family::Symmetric: return predict_symmetric(params.game, params.n);
    case Family::Alternating: return predict_alternating(params.game, params.n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace nimgen
