#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fixglue/bitmatrix.hpp"
#include "fixglue/perm.hpp"

namespace fixglue {

inline constexpr uint64_t kDefaultEnumerationBound = uint64_t{1} << 28;

struct WeightEnumerator {
  std::vector<uint64_t> counts;  // counts[w] = number of codewords of weight w

  int min_distance() const {
    for (size_t w = 1; w < counts.size(); ++w)
      if (counts[w]) return static_cast<int>(w);
    return 0;
  }
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

enum class MinDistMode { kAuto, kExhaustive };

// Binary linear [n, k] code held by its canonical RREF generator matrix, so
// equal row spaces compare equal.
class LinearCode {
 public:
  LinearCode() = default;

  // Canonicalizes arbitrary spanning rows; k becomes the rank.
  static LinearCode from_rows(const BitMatrix& rows, int n);
  static LinearCode from_strings(std::initializer_list<std::string_view> rows);
  static LinearCode zero(int n) { return from_rows(BitMatrix(0, n), n); }

  int length() const { return n_; }
  int dim() const { return gen_.rows(); }
  const BitMatrix& generator() const { return gen_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const BitVec& v) const;
  LinearCode dual() const;
  bool is_self_dual() const;
  bool is_self_orthogonal() const;

  LinearCode image(const Perm& sigma) const;
  LinearCode fixed_subcode(const Perm& sigma) const;

  // Exact weight distribution by full enumeration of 2^k codewords.
  WeightEnumerator weight_enumerator(int threads = 1, uint64_t bound = kDefaultEnumerationBound) const;

  // Exact minimum weight of a nonzero codeword. With early_abort_at = t the
  // call may return any weight < t as soon as such a codeword is seen; results
  // >= t are always exact. kAuto uses information-set enumeration with the
  // standard termination bound, kExhaustive enumerates all 2^k codewords.
  int min_distance(MinDistMode mode = MinDistMode::kAuto, std::optional<int> early_abort_at = std::nullopt,
                   int threads = 1) const;

  // Minimum weight and all codewords attaining it (full enumeration).
  std::pair<int, std::vector<BitVec>> min_weight_words(int threads = 1,
                                                       uint64_t bound = kDefaultEnumerationBound) const;
  std::vector<BitVec> words_of_weight(int w, int threads = 1, uint64_t bound = kDefaultEnumerationBound) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;
  friend bool operator<(const LinearCode& a, const LinearCode& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return lex_compare(a.gen_, b.gen_) < 0;
  }
  uint64_t hash() const { return gen_.hash() * 31 + static_cast<uint64_t>(n_); }

 private:
  int n_ = 0;
  BitMatrix gen_;              // RREF, dim rows
  std::vector<int> pivots_;
};

struct LinearCodeHash {
  size_t operator()(const LinearCode& c) const { return static_cast<size_t>(c.hash()); }
};

// Keeps from every sigma-orbit the coordinate with the smallest index, orbits
// ordered by smallest element; sigma must be a fixed point free involution and
// every generator of fixed must be sigma-fixed. Inverse: lift_fixed.
LinearCode project_fixed(const LinearCode& fixed, const Perm& sigma);
LinearCode lift_fixed(const LinearCode& half, const Perm& sigma);

}  // namespace fixglue
