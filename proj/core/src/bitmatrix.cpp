#include "fixglue/bitmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace fixglue {

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
  if (cols < 1) throw std::invalid_argument("BitMatrix: ncols must be >= 1");
  if (rows < 0) throw std::invalid_argument("BitMatrix: nrows must be >= 0");
  row_.assign(static_cast<size_t>(rows), BitVec(cols));
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
  if (rows.empty()) throw std::invalid_argument("BitMatrix::from_rows: need ncols; use BitMatrix(0, n)");
  BitMatrix m;
  m.cols_ = rows.front().size();
  for (const BitVec& r : rows)
    if (r.size() != m.cols_) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
  m.row_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVec> v;
  v.reserve(rows.size());
  for (std::string_view s : rows) v.push_back(BitVec::from_string(s));
  return from_rows(std::move(v));
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> v;
  v.reserve(rows.size());
  for (const std::string& s : rows) v.push_back(BitVec::from_string(s));
  return from_rows(std::move(v));
}

void BitMatrix::append_row(BitVec v) {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
  row_.push_back(std::move(v));
}

void BitMatrix::append_rows(const BitMatrix& m) {
  if (m.cols() != cols_) throw std::invalid_argument("BitMatrix::append_rows: ncols mismatch");
  for (int i = 0; i < m.rows(); ++i) row_.push_back(m.row(i));
}

int lex_compare(const BitMatrix& a, const BitMatrix& b) {
  int n = std::min(a.rows(), b.rows());
  for (int i = 0; i < n; ++i) {
    int c = lex_compare(a.row(i), b.row(i));
    if (c) return c;
  }
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  return 0;
}

uint64_t BitMatrix::hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(cols_) << 32);
  for (const BitVec& r : row_) {
    h ^= r.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(row_.size());
  for (const BitVec& r : row_) out.push_back(r.to_string());
  return out;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVec> rows = m.row_vector();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[static_cast<size_t>(i)].get(c)) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(r)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != r && rows[static_cast<size_t>(i)].get(c)) rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(r)];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(static_cast<size_t>(r), BitVec(m.cols()));
  RrefResult res;
  res.mat = r ? BitMatrix::from_rows(std::move(rows)) : BitMatrix(0, m.cols());
  res.pivots = std::move(pivots);
  return res;
}

int rank(const BitMatrix& m) { return rref(m).mat.rows(); }

BitMatrix kernel_basis(const BitMatrix& m) {
  RrefResult rr = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;

  BitMatrix out(0, n);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    BitVec v(n);
    v.set(f, true);
    for (int i = 0; i < rr.mat.rows(); ++i)
      if (rr.mat.get(i, f)) v.set(rr.pivots[static_cast<size_t>(i)], true);
    out.append_row(std::move(v));
  }
  return rref(out).mat;  // canonical form
}

BitMatrix dual_basis(const BitMatrix& gens, int n) {
  if (gens.cols() != n) throw std::invalid_argument("dual_basis: ncols != n");
  return kernel_basis(gens);
}

BitMatrix sum_spaces(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("sum_spaces: ncols mismatch");
  BitMatrix stacked = a;
  stacked.append_rows(b);
  return rref(stacked).mat;
}

BitMatrix intersect_spaces(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("intersect_spaces: ncols mismatch");
  // (A ∩ B) = (A^perp + B^perp)^perp
  int n = a.cols();
  return dual_basis(sum_spaces(dual_basis(a, n), dual_basis(b, n)), n);
}

bool space_contains(const BitMatrix& basis, const BitVec& v) {
  if (basis.cols() != v.size()) throw std::invalid_argument("space_contains: length mismatch");
  RrefResult rr = rref(basis);
  BitVec w = v;
  for (int i = 0; i < rr.mat.rows(); ++i) {
    if (w.get(rr.pivots[static_cast<size_t>(i)])) w ^= rr.mat.row(i);
  }
  return w.is_zero();
}

}  // namespace fixglue
