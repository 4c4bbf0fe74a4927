#include "nimgen/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

namespace nimgen {

namespace {

void fail(const std::string& msg) { throw ValidationError(msg); }

int find_identity(int n, const std::vector<std::uint16_t>& t) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = t[static_cast<std::size_t>(e) * n + a] == a &&
           t[static_cast<std::size_t>(a) * n + e] == a;
    if (ok) return e;
  }
  return -1;
}

void check_axioms(int n, const std::vector<std::uint16_t>& t, int identity) {
  // Latin square
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = t[static_cast<std::size_t>(a) * n + b];
      if (seen[v]) fail("row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = t[static_cast<std::size_t>(b) * n + a];
      if (seen[v]) fail("column " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  if (identity < 0) fail("table has no identity element");

  auto assoc = [&](int a, int b, int c) {
    int ab = t[static_cast<std::size_t>(a) * n + b];
    int bc = t[static_cast<std::size_t>(b) * n + c];
    return t[static_cast<std::size_t>(ab) * n + c] ==
           t[static_cast<std::size_t>(a) * n + bc];
  };
  if (n <= kFullAssociativityLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) fail("associativity fails");
  } else {
    std::mt19937 rng(0x5eedu + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> dist(0, n - 1);
    long long samples = 10LL * n * n;
    for (long long s = 0; s < samples; ++s)
      if (!assoc(dist(rng), dist(rng), dist(rng)))
        fail("associativity fails (sampled)");
  }
}

std::vector<std::uint16_t> find_inverses(int n, const std::vector<std::uint16_t>& t,
                                         int identity) {
  std::vector<std::uint16_t> inv(n);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b)
      if (t[static_cast<std::size_t>(a) * n + b] == identity &&
          t[static_cast<std::size_t>(b) * n + a] == identity) {
        found = b;
        break;
      }
    if (found < 0) fail("element " + std::to_string(a) + " has no inverse");
    inv[a] = static_cast<std::uint16_t>(found);
  }
  return inv;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

FiniteGroup make_group_unchecked(int order, std::vector<std::uint16_t> table,
                                 std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.identity_ = find_identity(order, g.table_);
  if (g.identity_ < 0) fail("table has no identity element");
  g.inverses_ = find_inverses(order, g.table_, g.identity_);
  g.labels_ = labels.empty() ? default_labels(order) : std::move(labels);
  if (static_cast<int>(g.labels_.size()) != order) fail("label count != order");
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail("empty table");
  if (n > 65535) fail("order too large for table representation");
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) fail("table is not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) fail("table entry out of range");
      flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
    }
  }
  int e = find_identity(n, flat);
  check_axioms(n, flat, e);
  FiniteGroup g;
  g.order_ = n;
  g.identity_ = e;
  g.inverses_ = find_inverses(n, flat, e);
  g.table_ = std::move(flat);
  g.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(g.labels_.size()) != n) fail("label count != order");
  return g;
}

int FiniteGroup::element_order(int i) const {
  int k = 1;
  int x = i;
  while (x != identity_) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::element_order_multiset() const {
  std::vector<int> orders(order_);
  for (int i = 0; i < order_; ++i) orders[i] = element_order(i);
  std::sort(orders.begin(), orders.end());
  return orders;
}

Subgroup::Subgroup(const FiniteGroup& g, ElementSet members) : elems_(std::move(members)) {
  if (elems_.universe() != g.order())
    throw ValidationError("subgroup universe does not match group order");
  if (!elems_.contains(g.identity()))
    throw ValidationError("subgroup is missing the identity");
  auto mem = elems_.members();
  for (int a : mem)
    for (int b : mem)
      if (!elems_.contains(g.mul(a, b)))
        throw ValidationError("set is not closed under the group operation");
  if (g.order() % elems_.size() != 0)
    throw ValidationError("subgroup order does not divide the group order");
}

ElementSet closure_set(const FiniteGroup& g, const ElementSet& seed) {
  const int n = g.order();
  ElementSet cur(n);
  cur.insert(g.identity());
  std::deque<int> work;
  seed.for_each([&](int s) {
    if (!cur.contains(s)) {
      cur.insert(s);
      work.push_back(s);
    }
  });
  // A finite set closed under multiplication is a subgroup; any partial
  // set larger than n/2 can only close up to G itself.
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int y = cur.next_member(0); y >= 0; y = cur.next_member(y + 1)) {
      int p = g.mul(x, y);
      if (!cur.contains(p)) {
        cur.insert(p);
        work.push_back(p);
      }
      int q = g.mul(y, x);
      if (!cur.contains(q)) {
        cur.insert(q);
        work.push_back(q);
      }
    }
    if (2 * cur.size() > n) return ElementSet::full(n);
  }
  return cur;
}

Subgroup closure(const FiniteGroup& g, const ElementSet& seed) {
  return Subgroup(g, closure_set(g, seed));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    const SubgroupEnumLimits& limits) {
  const int n = g.order();
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::deque<ElementSet> queue;

  auto add = [&](const ElementSet& s) {
    if (known.insert(s).second) {
      if (static_cast<int>(known.size()) > limits.max_subgroups)
        throw ResourceLimitError("subgroup count exceeds cap of " +
                                 std::to_string(limits.max_subgroups));
      queue.push_back(s);
    }
  };

  ElementSet trivial(n);
  trivial.insert(g.identity());
  add(trivial);
  for (int x = 0; x < n; ++x) {
    ElementSet seed(n);
    seed.insert(x);
    add(closure_set(g, seed));
  }
  // extend each known subgroup by one element until no new subgroup appears
  while (!queue.empty()) {
    ElementSet h = queue.front();
    queue.pop_front();
    if (h.size() == n) continue;
    for (int x = 0; x < n; ++x) {
      if (h.contains(x)) continue;
      ElementSet seed = h;
      seed.insert(x);
      add(closure_set(g, seed));
    }
  }

  std::vector<ElementSet> sets(known.begin(), known.end());
  std::sort(sets.begin(), sets.end(), canonical_less);
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(g, std::move(s));
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g,
                                        const std::vector<Subgroup>& all) {
  const int n = g.order();
  if (n <= 1) throw TrivialGroupError("the trivial group has no maximal subgroups");
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].order() == n) continue;  // not proper
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j) {
      if (j == i || all[j].order() == n) continue;
      if (all[j].order() > all[i].order() &&
          all[i].elements().is_subset_of(all[j].elements()))
        maximal = false;
    }
    if (maximal) out.push_back(all[i]);
  }
  return out;  // canonical order inherited from `all`
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g) {
  return maximal_subgroups(g, all_subgroups(g));
}

bool is_generating(const FiniteGroup& g, const std::vector<Subgroup>& maximals,
                   const ElementSet& s) {
  if (g.order() == 1) return true;
  for (const Subgroup& m : maximals)
    if (s.is_subset_of(m.elements())) return false;
  return true;
}

bool is_generating(const FiniteGroup& g, const ElementSet& s) {
  if (g.order() == 1) return true;
  return is_generating(g, maximal_subgroups(g), s);
}

}  // namespace nimgen
