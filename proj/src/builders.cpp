#include "nimgen/builders.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace nimgen {

namespace {

using Perm = std::vector<int>;  // image vector on 0-based points

Perm perm_identity(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a*b)(x) = a(b(x))
Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

bool perm_is_even(const Perm& p) {
  std::vector<char> visited(p.size(), 0);
  int transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (visited[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !visited[j]; j = p[j]) {
      visited[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// canonical cycle notation with 1-based points, fixed points omitted
std::string perm_label(const Perm& p) {
  std::string out;
  std::vector<char> visited(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (visited[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    int j = static_cast<int>(i);
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      visited[j] = 1;
      j = p[j];
      first = false;
    } while (j != static_cast<int>(i));
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup group_from_perms(std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());  // identity is lexicographically first
  int n = static_cast<int>(elements.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[elements[i]] = i;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index.at(perm_compose(elements[a], elements[b])));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = perm_label(elements[i]);
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

// ---- group-spec parser ----

class SpecParser {
public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec first = parse_term();
    skip_ws();
    if (eof()) return first;
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::Product;
    prod.factors.push_back(std::move(first));
    while (!eof()) {
      expect_char('x', "'x' between product factors");
      prod.factors.push_back(parse_term());
      skip_ws();
    }
    return prod;
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect_char(char c, const std::string& what) {
    skip_ws();
    if (eof() || std::tolower(static_cast<unsigned char>(peek())) != c)
      throw ParseError("expected " + what, pos_);
    ++pos_;
  }

  int parse_int(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected " + what, pos_);
    if (pos_ - start > 7) throw ParseError("number too large", start);
    return static_cast<int>(std::stol(text_.substr(start, pos_ - start)));
  }

  bool consume_keyword(const std::string& kw) {
    skip_ws();
    std::size_t p = pos_;
    for (char c : kw) {
      if (p >= text_.size() ||
          std::tolower(static_cast<unsigned char>(text_[p])) != c)
        return false;
      ++p;
    }
    pos_ = p;
    return true;
  }

  GroupSpec parse_term() {
    skip_ws();
    if (eof()) throw ParseError("expected a group term", pos_);
    if (consume_keyword("perm:")) return parse_perm();
    if (consume_keyword("cayley:")) return parse_cayley();
    char c = std::tolower(static_cast<unsigned char>(peek()));
    if (c == 'z' || c == 'd' || c == 's' || c == 'a') {
      ++pos_;
      GroupSpec spec;
      spec.n = parse_int("group order parameter after '" + std::string(1, c) + "'");
      switch (c) {
        case 'z': spec.kind = GroupSpec::Kind::Cyclic; break;
        case 'd': spec.kind = GroupSpec::Kind::Dihedral; break;
        case 's': spec.kind = GroupSpec::Kind::Symmetric; break;
        default: spec.kind = GroupSpec::Kind::Alternating; break;
      }
      check_param(spec);
      return spec;
    }
    throw ParseError("expected one of Z<n>, D<n>, S<n>, A<n>, perm:, cayley:", pos_);
  }

  void check_param(const GroupSpec& spec) {
    switch (spec.kind) {
      case GroupSpec::Kind::Cyclic:
        if (spec.n < 1) throw ParseError("Z<n> requires n >= 1", pos_);
        break;
      case GroupSpec::Kind::Dihedral:
        if (spec.n < 2) throw ParseError("D<n> requires n >= 2", pos_);
        break;
      case GroupSpec::Kind::Symmetric:
        if (spec.n < 1) throw ParseError("S<n> requires n >= 1", pos_);
        break;
      case GroupSpec::Kind::Alternating:
        if (spec.n < 3) throw ParseError("A<n> requires n >= 3", pos_);
        break;
      default: break;
    }
  }

  GroupSpec parse_perm() {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Perm;
    spec.generators.push_back(parse_cycles());
    while (true) {
      skip_ws();
      if (eof() || std::tolower(static_cast<unsigned char>(peek())) != ',') break;
      ++pos_;
      spec.generators.push_back(parse_cycles());
    }
    return spec;
  }

  std::vector<std::vector<int>> parse_cycles() {
    std::vector<std::vector<int>> cycles;
    skip_ws();
    if (eof() || peek() != '(')
      throw ParseError("expected '(' starting a cycle", pos_);
    while (!eof() && peek() == '(') {
      ++pos_;
      std::vector<int> cycle;
      while (true) {
        skip_ws();
        if (!eof() && peek() == ',') { ++pos_; continue; }  // lenient inside parens
        if (!eof() && peek() == ')') { ++pos_; break; }
        int point = parse_int("a 1-based point or ')'");
        if (point < 1) throw ParseError("cycle points are 1-based", pos_);
        cycle.push_back(point);
      }
      if (cycle.empty()) throw ParseError("empty cycle", pos_);
      cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return cycles;
  }

  GroupSpec parse_cayley() {
    // the path runs to the end of the spec, so a cayley term can only
    // appear as the last factor of a product
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::CayleyFile;
    std::size_t start = pos_;
    spec.path = text_.substr(start);
    pos_ = text_.size();
    // trim surrounding whitespace from the path
    while (!spec.path.empty() && std::isspace(static_cast<unsigned char>(spec.path.front())))
      spec.path.erase(spec.path.begin());
    while (!spec.path.empty() && std::isspace(static_cast<unsigned char>(spec.path.back())))
      spec.path.pop_back();
    if (spec.path.empty()) throw ParseError("expected a file path after cayley:", start);
    return spec;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(n);
    case Kind::Dihedral: return "D" + std::to_string(n);
    case Kind::Symmetric: return "S" + std::to_string(n);
    case Kind::Alternating: return "A" + std::to_string(n);
    case Kind::CayleyFile: return "cayley:" + path;
    case Kind::Perm: {
      std::string out = "perm:";
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i > 0) out += ',';
        for (const auto& cycle : generators[i]) {
          out += '(';
          for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(cycle[j]);
          }
          out += ')';
        }
      }
      return out;
    }
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += 'x';
        out += factors[i].to_string();
      }
      return out;
    }
  }
  return {};
}

GroupSpec parse_group_spec(const std::string& text) {
  SpecParser parser(text);
  return parser.parse();
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

FiniteGroup dihedral_group(int n) {
  if (n < 2) throw ValidationError("dihedral group needs n >= 2");
  // index i + s*n represents r^i f^s;  (r^a f^s)(r^c f^t) = r^(a+(-1)^s c) f^(s+t)
  int order = 2 * n;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(order) * order);
  auto idx = [n](int rot, int flip) { return flip * n + rot; };
  for (int a = 0; a < n; ++a)
    for (int s = 0; s <= 1; ++s)
      for (int c = 0; c < n; ++c)
        for (int t = 0; t <= 1; ++t) {
          int rot = s == 0 ? (a + c) % n : ((a - c) % n + n) % n;
          table[static_cast<std::size_t>(idx(a, s)) * order + idx(c, t)] =
              static_cast<std::uint16_t>(idx(rot, s ^ t));
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i) {
    labels[idx(i, 0)] = i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i));
    labels[idx(i, 1)] = i == 0 ? "f" : (i == 1 ? "rf" : "r" + std::to_string(i) + "f");
  }
  return make_group_unchecked(order, std::move(table), std::move(labels));
}

FiniteGroup symmetric_group(int n, const BuildLimits& limits) {
  if (n < 1) throw ValidationError("symmetric group needs n >= 1");
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  if (order > limits.max_order)
    throw ResourceLimitError("S" + std::to_string(n) + " exceeds the order cap of " +
                             std::to_string(limits.max_order));
  std::vector<Perm> elements;
  Perm p = perm_identity(n);
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(elements));
}

FiniteGroup alternating_group(int n, const BuildLimits& limits) {
  if (n < 3) throw ValidationError("alternating group needs n >= 3");
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  order /= 2;
  if (order > limits.max_order)
    throw ResourceLimitError("A" + std::to_string(n) + " exceeds the order cap of " +
                             std::to_string(limits.max_order));
  std::vector<Perm> elements;
  Perm p = perm_identity(n);
  do {
    if (perm_is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(elements));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const BuildLimits& limits) {
  long long order = static_cast<long long>(g.order()) * h.order();
  if (order > limits.max_order)
    throw ResourceLimitError("direct product order " + std::to_string(order) +
                             " exceeds the cap of " + std::to_string(limits.max_order));
  int n = static_cast<int>(order);
  int hn = h.order();
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    int a1 = a / hn, a2 = a % hn;
    for (int b = 0; b < n; ++b) {
      int b1 = b / hn, b2 = b % hn;
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(g.mul(a1, b1) * hn + h.mul(a2, b2));
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a)
    labels[a] = "(" + g.label(a / hn) + "," + h.label(a % hn) + ")";
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

namespace {

FiniteGroup build_perm_group(const GroupSpec& spec, const BuildLimits& limits) {
  int points = 0;
  for (const auto& gen : spec.generators)
    for (const auto& cycle : gen)
      for (int pt : cycle) points = std::max(points, pt);
  if (points > limits.max_perm_points)
    throw ResourceLimitError("permutation generators use " + std::to_string(points) +
                             " points; the cap is " + std::to_string(limits.max_perm_points));
  if (points == 0) throw ValidationError("perm spec has no points");

  std::vector<Perm> gens;
  for (const auto& gen : spec.generators) {
    Perm p = perm_identity(points);
    std::vector<char> used(points, 0);
    for (const auto& cycle : gen) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i] - 1;
        int to = cycle[(i + 1) % cycle.size()] - 1;
        if (used[from]) throw ValidationError("cycles of one generator must be disjoint");
        used[from] = 1;
        p[from] = to;
      }
    }
    gens.push_back(std::move(p));
  }

  // closure under composition
  std::map<Perm, int> seen;
  std::vector<Perm> elements;
  std::vector<Perm> queue;
  auto add = [&](const Perm& p) {
    if (seen.emplace(p, 1).second) {
      if (static_cast<int>(seen.size()) > limits.max_order)
        throw ResourceLimitError("perm group exceeds the order cap of " +
                                 std::to_string(limits.max_order));
      elements.push_back(p);
      queue.push_back(p);
    }
  };
  add(perm_identity(points));
  for (const auto& gen : gens) add(gen);
  while (!queue.empty()) {
    Perm cur = queue.back();
    queue.pop_back();
    for (const auto& gen : gens) {
      add(perm_compose(cur, gen));
      add(perm_compose(gen, cur));
    }
  }
  return group_from_perms(std::move(elements));
}

}  // namespace

FiniteGroup build(const GroupSpec& spec, const BuildLimits& limits) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic_group(spec.n);
    case GroupSpec::Kind::Dihedral: return dihedral_group(spec.n);
    case GroupSpec::Kind::Symmetric: return symmetric_group(spec.n, limits);
    case GroupSpec::Kind::Alternating: return alternating_group(spec.n, limits);
    case GroupSpec::Kind::Perm: return build_perm_group(spec, limits);
    case GroupSpec::Kind::CayleyFile: return load_cayley_file(spec.path);
    case GroupSpec::Kind::Product: {
      if (spec.factors.empty()) throw ValidationError("empty product");
      FiniteGroup acc = build(spec.factors[0], limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = direct_product(acc, build(spec.factors[i], limits), limits);
      return acc;
    }
  }
  throw ValidationError("unhandled group spec");
}

FiniteGroup build_group(const std::string& spec_text, const BuildLimits& limits) {
  return build(parse_group_spec(spec_text), limits);
}

FiniteGroup load_cayley_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid Cayley JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw ValidationError("Cayley JSON must be an object with 'order' and 'table'");
  int n = doc["order"].get<int>();
  if (n < 1) throw ValidationError("Cayley order must be positive");
  auto table = doc["table"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw ValidationError("Cayley table row count != order");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    labels = doc["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
      throw ValidationError("Cayley label count != order");
  }

  FiniteGroup raw = FiniteGroup::from_table(table, labels);
  int e = raw.identity();
  if (e == 0) return raw;
  // relabel by the transposition 0 <-> e so the identity lands on index 0
  auto rename = [e](int i) { return i == 0 ? e : (i == e ? 0 : i); };
  std::vector<std::vector<int>> fixed(n, std::vector<int>(n));
  std::vector<std::string> fixed_labels(n);
  for (int a = 0; a < n; ++a) {
    fixed_labels[a] = raw.label(rename(a));
    for (int b = 0; b < n; ++b)
      fixed[a][b] = rename(raw.mul(rename(a), rename(b)));
  }
  return FiniteGroup::from_table(fixed, fixed_labels);
}

FiniteGroup load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open Cayley file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_cayley_json(buf.str());
}

}  // namespace nimgen
