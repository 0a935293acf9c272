#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "fixglue/bitvec.hpp"

namespace fixglue {

// Row-major GF(2) matrix. A 0-row matrix with ncols = n represents the zero
// subspace of F_2^n.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  static BitMatrix from_rows(std::vector<BitVec> rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  int rows() const { return static_cast<int>(row_.size()); }
  int cols() const { return cols_; }

  const BitVec& row(int i) const { return row_[static_cast<size_t>(i)]; }
  BitVec& row(int i) { return row_[static_cast<size_t>(i)]; }
  const std::vector<BitVec>& row_vector() const { return row_; }

  void append_row(BitVec v);
  void append_rows(const BitMatrix& m);

  bool get(int r, int c) const { return row_[static_cast<size_t>(r)].get(c); }
  void set(int r, int c, bool v) { row_[static_cast<size_t>(r)].set(c, v); }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  // Row-by-row lexicographic order (shorter matrix wins ties on the prefix).
  friend int lex_compare(const BitMatrix& a, const BitMatrix& b);
  friend bool operator<(const BitMatrix& a, const BitMatrix& b) { return lex_compare(a, b) < 0; }

  uint64_t hash() const;
  std::vector<std::string> to_strings() const;

 private:
  int cols_ = 0;
  std::vector<BitVec> row_;
};

struct RrefResult {
  BitMatrix mat;            // reduced row-echelon form, zero rows dropped
  std::vector<int> pivots;  // strictly increasing column indices, 0-based
};

// Reduced row-echelon form over GF(2); preserves the row space. The RREF with
// ascending pivots is the canonical basis form used for every returned basis.
RrefResult rref(const BitMatrix& m);

int rank(const BitMatrix& m);

// Basis of {x : m x^T = 0}, canonical form; rows() == cols(m) - rank(m).
BitMatrix kernel_basis(const BitMatrix& m);

// Basis of the Euclidean dual of the row space of gens inside F_2^n.
BitMatrix dual_basis(const BitMatrix& gens, int n);

// Canonical basis of the sum / intersection of two row spaces.
BitMatrix sum_spaces(const BitMatrix& a, const BitMatrix& b);
BitMatrix intersect_spaces(const BitMatrix& a, const BitMatrix& b);

// Membership of v in the row space of basis.
bool space_contains(const BitMatrix& basis, const BitVec& v);

}  // namespace fixglue
