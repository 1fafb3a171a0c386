// Dense bitset over the elements {0, ..., n-1} of a finite group.
// Subgroups, cosets and arbitrary element sets are all ElemSets; the
// universe size is carried along so mixed-universe operations can assert.
#pragma once

#include <cstdint>
#include <bit>
#include <cassert>
#include <cstddef>
#include <vector>

namespace submod {

class ElemSet {
public:
  ElemSet() = default;
  explicit ElemSet(int universe)
      : n_(universe), w_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static ElemSet single(int universe, int i) {
    ElemSet s(universe);
    s.set(i);
    return s;
  }
  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // set containment: every member of o is a member of *this
  bool contains(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  ElemSet& operator|=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }

  // '0' < '1' string order on the characteristic vector b0 b1 ... b(n-1):
  // the set lacking the first element where the two sets differ sorts first.
  bool lex_less(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i] ^ o.w_[i];
      if (x) {
        int bit = std::countr_zero(x);
        return !((w_[i] >> bit) & 1u);
      }
    }
    return false;
  }

  int first() const { return next(-1); }
  int next(int after) const {
    int i = after + 1;
    if (i >= n_) return -1;
    std::size_t word = static_cast<std::size_t>(i) >> 6;
    std::uint64_t cur = w_[word] >> (i & 63);
    if (cur) return i + std::countr_zero(cur);
    for (++word; word < w_.size(); ++word)
      if (w_[word]) return static_cast<int>(word * 64) + std::countr_zero(w_[word]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  std::size_t hash() const {
    // FNV-1a over the words; implementation-stable, used only for interning
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

// canonical subgroup order: smaller sets first, ties by lexicographic members
inline bool canonical_less(const ElemSet& a, const ElemSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.lex_less(b);
}

}  // namespace submod
