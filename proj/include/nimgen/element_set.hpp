#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace nimgen {

// Subset of {0, ..., universe-1} with bit-vector storage. All binary
// operations require both operands to share the same universe.
class ElementSet {
public:
  ElementSet() = default;

  explicit ElementSet(int universe) : universe_(check_universe(universe)) {
    words_.assign((universe_ + 63) / 64, 0);
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  static ElementSet of(int universe, std::initializer_list<int> members) {
    ElementSet s(universe);
    for (int m : members) s.insert(m);
    return s;
  }

  int universe() const { return universe_; }

  int size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool contains(int i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void insert(int i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(int i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  // set difference
  ElementSet& operator-=(const ElementSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool is_subset_of(const ElementSet& o) const {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool operator==(const ElementSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  // Lexicographic order on the ascending member lists: {0,3} < {1,2},
  // and a strict prefix sorts first: {0} < {0,1}.
  static int compare_members(const ElementSet& a, const ElementSet& b) {
    a.check_same(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        int e = static_cast<int>(w << 6) + __builtin_ctzll(diff);
        bool in_a = a.contains(e);
        const ElementSet& other = in_a ? b : a;
        if (other.next_member(e + 1) < 0) return in_a ? 1 : -1;  // prefix
        return in_a ? -1 : 1;
      }
    }
    return 0;
  }

  // first member >= from, or -1
  int next_member(int from) const {
    if (from >= universe_) return -1;
    int w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) return (w << 6) + __builtin_ctzll(cur);
      if (++w >= static_cast<int>(words_.size())) return -1;
      cur = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = next_member(0); i >= 0; i = next_member(i + 1)) f(i);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()(universe_);
    for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  static int check_universe(int u) {
    if (u < 0) throw std::invalid_argument("ElementSet: negative universe");
    return u;
  }
  void check_index(int i) const {
    if (i < 0 || i >= universe_) throw std::out_of_range("ElementSet: index outside universe");
  }
  void check_same(const ElementSet& o) const {
    if (universe_ != o.universe_) throw std::invalid_argument("ElementSet: universe mismatch");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// canonical order used for subgroup lists: size first, then member order
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return ElementSet::compare_members(a, b) < 0;
}

}  // namespace nimgen
