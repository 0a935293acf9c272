#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fixglue {

// Dense vector over GF(2), bit-packed into 64-bit words. Coordinate i lives in
// word i/64 at bit i%64; unused tail bits are kept zero so whole-word
// comparisons are valid.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) {
    if (n < 1) throw std::invalid_argument("BitVec: length must be >= 1");
    n_ = n;
    w_.assign((static_cast<size_t>(n) + 63) / 64, 0);
  }

  static BitVec from_string(std::string_view s) {
    BitVec v(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(static_cast<int>(i), true);
      else if (s[i] != '0')
        throw std::invalid_argument("BitVec: expected only '0'/'1'");
    }
    return v;
  }

  int size() const { return n_; }

  bool get(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i, bool v) {
    assert(i >= 0 && i < n_);
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[static_cast<size_t>(i) >> 6] |= m;
    else
      w_[static_cast<size_t>(i) >> 6] &= ~m;
  }

  void flip(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63);
  }

  BitVec& operator^=(const BitVec& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  int weight() const {
    int w = 0;
    for (uint64_t x : w_) w += std::popcount(x);
    return w;
  }

  bool is_zero() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }

  // Euclidean inner product (parity of the AND).
  bool dot(const BitVec& o) const {
    assert(n_ == o.n_);
    int p = 0;
    for (size_t i = 0; i < w_.size(); ++i) p += std::popcount(w_[i] & o.w_[i]);
    return p & 1;
  }

  // Index of the first set coordinate, or -1.
  int first_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  std::vector<int> support() const {
    std::vector<int> out;
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        out.push_back(static_cast<int>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if (get(i)) s[static_cast<size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Lexicographic comparison of coordinate sequences, '0' before '1'.
  friend int lex_compare(const BitVec& a, const BitVec& b) {
    assert(a.n_ == b.n_);
    for (size_t i = 0; i < a.w_.size(); ++i) {
      uint64_t d = a.w_[i] ^ b.w_[i];
      if (d) {
        int bit = std::countr_zero(d);
        return (a.w_[i] >> bit) & 1 ? 1 : -1;
      }
    }
    return 0;
  }
  friend bool operator<(const BitVec& a, const BitVec& b) { return lex_compare(a, b) < 0; }

  uint64_t hash() const {
    uint64_t h = 0xcbf29ce484222325ull ^ static_cast<uint64_t>(n_);
    for (uint64_t x : w_) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace fixglue
