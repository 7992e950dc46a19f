#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace kmetric {

// ----- Bitset ---------------------------------------------------------------
// Vertex sets. Capacity fixed at construction; one uint64 word per 64 vertices.
class Bitset {
  using word = std::uint64_t;

public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] |= word(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] &= ~(word(1) << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void clear() {
    for (word& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (word w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (word w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // this \ o
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  // Complement within capacity (trailing bits stay zero).
  Bitset complemented() const {
    Bitset r(*this);
    for (word& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const = default;

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  static int and_count(const Bitset& a, const Bitset& b) {
    assert(a.nbits_ == b.nbits_);
    int c = 0;
    for (size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  // Index of the lowest set bit at or after `from`; -1 when none.
  int next_set(int from) const {
    if (from >= nbits_) return -1;
    size_t wi = from >> 6;
    word w = words_[wi] & (~word(0) << (from & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first_set() const { return next_set(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = first_set(); i >= 0; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = first_set(); i >= 0; i = next_set(i + 1)) f(i);
  }

private:
  void trim() {
    if (int tail = nbits_ & 63; tail != 0 && !words_.empty())
      words_.back() &= (word(1) << tail) - 1;
  }

  int nbits_ = 0;
  std::vector<word> words_;
};

}  // namespace kmetric
