#include "fixglue/linear_code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <mutex>
#include <stdexcept>

#include "fixglue/util.hpp"

namespace fixglue {

LinearCode LinearCode::from_rows(const BitMatrix& rows, int n) {
  if (rows.cols() != n) throw std::invalid_argument("LinearCode: row length != n");
  RrefResult rr = rref(rows);
  LinearCode c;
  c.n_ = n;
  c.gen_ = std::move(rr.mat);
  c.pivots_ = std::move(rr.pivots);
  return c;
}

LinearCode LinearCode::from_strings(std::initializer_list<std::string_view> rows) {
  BitMatrix m = BitMatrix::from_strings(rows);
  return from_rows(m, m.cols());
}

bool LinearCode::contains(const BitVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("LinearCode::contains: length mismatch");
  BitVec w = v;
  for (int i = 0; i < gen_.rows(); ++i)
    if (w.get(pivots_[static_cast<size_t>(i)])) w ^= gen_.row(i);
  return w.is_zero();
}

LinearCode LinearCode::dual() const { return from_rows(kernel_basis(gen_.rows() ? gen_ : BitMatrix(0, n_)), n_); }

bool LinearCode::is_self_orthogonal() const {
  for (int i = 0; i < gen_.rows(); ++i)
    for (int j = i; j < gen_.rows(); ++j)
      if (gen_.row(i).dot(gen_.row(j))) return false;
  return true;
}

bool LinearCode::is_self_dual() const { return n_ == 2 * dim() && is_self_orthogonal(); }

LinearCode LinearCode::image(const Perm& sigma) const {
  if (sigma.degree() != n_) throw std::invalid_argument("LinearCode::image: degree mismatch");
  BitMatrix m(0, n_);
  for (int i = 0; i < gen_.rows(); ++i) m.append_row(sigma.apply(gen_.row(i)));
  LinearCode c = from_rows(m, n_);
  return c;
}

LinearCode LinearCode::fixed_subcode(const Perm& sigma) const {
  if (sigma.degree() != n_) throw std::invalid_argument("LinearCode::fixed_subcode: degree mismatch");
  int k = dim();
  if (k == 0) return *this;
  // solve sum x_i (r_i + r_i^sigma) = 0 in the coefficient space
  BitMatrix diff(0, n_);
  for (int i = 0; i < k; ++i) diff.append_row(gen_.row(i) ^ sigma.apply(gen_.row(i)));
  // kernel of diff^T acting on coefficients: rows of diff indexed by i
  // build k-column matrix whose row j is (diff row coefficients)... we need
  // {x in F_2^k : sum_i x_i diff_i = 0}: kernel of the k x n matrix diff seen
  // as a map from coefficients, i.e. kernel of diff transposed.
  BitMatrix diff_t(n_, k);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < n_; ++c)
      if (diff.get(i, c)) diff_t.set(c, i, true);
  BitMatrix coeff = kernel_basis(diff_t);
  BitMatrix fixed(0, n_);
  for (int r = 0; r < coeff.rows(); ++r) {
    BitVec v(n_);
    for (int i = 0; i < k; ++i)
      if (coeff.get(r, i)) v ^= gen_.row(i);
    fixed.append_row(std::move(v));
  }
  return from_rows(fixed, n_);
}

namespace {

// Calls fn(weight, codeword_words) for every nonzero codeword in the Gray-code
// index range [begin, end); indices m encode the codeword XOR of rows set in
// gray(m) = m ^ (m >> 1). Returns false if fn requested a stop.
template <typename Fn>
bool gray_scan(const std::vector<BitVec>& rows, uint64_t begin, uint64_t end, Fn&& fn) {
  if (begin >= end) return true;
  BitVec cur(rows[0].size());
  uint64_t g = begin ^ (begin >> 1);
  for (size_t i = 0; i < rows.size(); ++i)
    if ((g >> i) & 1) cur ^= rows[i];
  for (uint64_t m = begin;;) {
    if (m != 0) {
      if (!fn(cur)) return false;
    }
    ++m;
    if (m >= end) break;
    cur ^= rows[static_cast<size_t>(std::countr_zero(m))];
  }
  return true;
}

void check_enumeration_bound(int k, uint64_t bound) {
  if (k < 0 || k >= 63 || (uint64_t{1} << k) > bound)
    throw std::runtime_error("codeword enumeration bound exceeded");
}

}  // namespace

WeightEnumerator LinearCode::weight_enumerator(int threads, uint64_t bound) const {
  check_enumeration_bound(dim(), bound);
  WeightEnumerator we;
  we.counts.assign(static_cast<size_t>(n_) + 1, 0);
  we.counts[0] = 1;
  if (dim() == 0) return we;
  uint64_t total = uint64_t{1} << dim();
  int nt = resolve_threads(threads);
  std::vector<std::vector<uint64_t>> local(static_cast<size_t>(nt),
                                           std::vector<uint64_t>(static_cast<size_t>(n_) + 1, 0));
  const auto& rows = gen_.row_vector();
  parallel_chunks(total, nt, [&](uint64_t b, uint64_t e, int w) {
    auto& counts = local[static_cast<size_t>(w)];
    gray_scan(rows, b, e, [&](const BitVec& c) {
      ++counts[static_cast<size_t>(c.weight())];
      return true;
    });
  });
  for (const auto& l : local)
    for (size_t i = 0; i <= static_cast<size_t>(n_); ++i) we.counts[i] += l[i];
  return we;
}

namespace {

// Disjoint information sets with systematic generator matrices, for the
// ascending-information-weight minimum distance enumeration.
struct InfoSet {
  std::vector<BitVec> rows;
  int fresh_rank = 0;  // pivots in columns not used by earlier sets
};

std::vector<InfoSet> disjoint_information_sets(const BitMatrix& gen) {
  int n = gen.cols(), k = gen.rows();
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::vector<InfoSet> sets;
  while (true) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
      if (!used[static_cast<size_t>(c)]) order.push_back(c);
    size_t avail = order.size();
    if (avail == 0) break;
    for (int c = 0; c < n; ++c)
      if (used[static_cast<size_t>(c)]) order.push_back(c);

    std::vector<BitVec> rows = gen.row_vector();
    int r = 0, fresh = 0;
    std::vector<int> fresh_cols;
    for (size_t oi = 0; oi < order.size() && r < k; ++oi) {
      int c = order[oi];
      int p = -1;
      for (int i = r; i < k; ++i)
        if (rows[static_cast<size_t>(i)].get(c)) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(r)]);
      for (int i = 0; i < k; ++i)
        if (i != r && rows[static_cast<size_t>(i)].get(c)) rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(r)];
      if (oi < avail) {
        ++fresh;
        fresh_cols.push_back(c);
      }
      ++r;
    }
    if (fresh == 0) break;
    for (int c : fresh_cols) used[static_cast<size_t>(c)] = true;
    sets.push_back({std::move(rows), fresh});
  }
  return sets;
}

// Enumerates XORs of exactly `remaining` rows starting from `start`; keeps the
// best (smallest) nonzero weight. Returns false to stop (early abort).
bool combo_scan(const std::vector<BitVec>& rows, int start, int remaining, BitVec& cur, int& best,
                const std::optional<int>& abort_at) {
  if (remaining == 0) {
    int w = cur.weight();
    if (w < best) {
      best = w;
      if (abort_at && best < *abort_at) return false;
    }
    return true;
  }
  int k = static_cast<int>(rows.size());
  for (int i = start; i + remaining <= k; ++i) {
    cur ^= rows[static_cast<size_t>(i)];
    bool cont = combo_scan(rows, i + 1, remaining - 1, cur, best, abort_at);
    cur ^= rows[static_cast<size_t>(i)];
    if (!cont) return false;
  }
  return true;
}

int min_distance_information_sets(const BitMatrix& gen, const std::optional<int>& abort_at) {
  int k = gen.rows(), n = gen.cols();
  std::vector<InfoSet> sets = disjoint_information_sets(gen);
  int best = n + 1;
  for (int w = 1; w <= k; ++w) {
    for (const InfoSet& s : sets) {
      BitVec cur(n);
      if (!combo_scan(s.rows, 0, w, cur, best, abort_at)) return best;
    }
    // all codewords of information weight <= w are enumerated in every set
    long lower = 0;
    for (const InfoSet& s : sets) lower += std::max(0, (w + 1) - (k - s.fresh_rank));
    if (lower >= best) return best;
  }
  return best;
}

}  // namespace

int LinearCode::min_distance(MinDistMode mode, std::optional<int> early_abort_at, int threads) const {
  if (dim() == 0) throw std::invalid_argument("min_distance: k = 0");
  if (mode == MinDistMode::kAuto) return min_distance_information_sets(gen_, early_abort_at);

  check_enumeration_bound(dim(), kDefaultEnumerationBound << 4);
  uint64_t total = uint64_t{1} << dim();
  int nt = resolve_threads(threads);
  std::vector<int> local(static_cast<size_t>(nt), n_ + 1);
  std::atomic<bool> stop{false};
  const auto& rows = gen_.row_vector();
  parallel_chunks(total, nt, [&](uint64_t b, uint64_t e, int w) {
    int best = n_ + 1;
    uint64_t steps = 0;
    gray_scan(rows, b, e, [&](const BitVec& c) {
      int wt = c.weight();
      if (wt < best) {
        best = wt;
        if (early_abort_at && best < *early_abort_at) {
          stop.store(true, std::memory_order_relaxed);
          local[static_cast<size_t>(w)] = best;
          return false;
        }
      }
      if ((++steps & 0xFFFF) == 0 && stop.load(std::memory_order_relaxed)) return false;
      return true;
    });
    local[static_cast<size_t>(w)] = std::min(local[static_cast<size_t>(w)], best);
  });
  return *std::min_element(local.begin(), local.end());
}

std::pair<int, std::vector<BitVec>> LinearCode::min_weight_words(int threads, uint64_t bound) const {
  if (dim() == 0) return {0, {}};
  check_enumeration_bound(dim(), bound);
  uint64_t total = uint64_t{1} << dim();
  int nt = resolve_threads(threads);
  struct Local {
    int best;
    std::vector<BitVec> words;
  };
  std::vector<Local> local(static_cast<size_t>(nt));
  for (auto& l : local) l.best = n_ + 1;
  const auto& rows = gen_.row_vector();
  parallel_chunks(total, nt, [&](uint64_t b, uint64_t e, int w) {
    Local& l = local[static_cast<size_t>(w)];
    gray_scan(rows, b, e, [&](const BitVec& c) {
      int wt = c.weight();
      if (wt < l.best) {
        l.best = wt;
        l.words.clear();
      }
      if (wt == l.best) l.words.push_back(c);
      return true;
    });
  });
  int best = n_ + 1;
  for (const auto& l : local) best = std::min(best, l.best);
  std::vector<BitVec> words;
  for (auto& l : local)
    if (l.best == best)
      for (auto& v : l.words) words.push_back(std::move(v));
  std::sort(words.begin(), words.end());
  return {best, std::move(words)};
}

std::vector<BitVec> LinearCode::words_of_weight(int w, int threads, uint64_t bound) const {
  if (dim() == 0) return {};
  check_enumeration_bound(dim(), bound);
  uint64_t total = uint64_t{1} << dim();
  int nt = resolve_threads(threads);
  std::vector<std::vector<BitVec>> local(static_cast<size_t>(nt));
  const auto& rows = gen_.row_vector();
  parallel_chunks(total, nt, [&](uint64_t b, uint64_t e, int t) {
    gray_scan(rows, b, e, [&](const BitVec& c) {
      if (c.weight() == w) local[static_cast<size_t>(t)].push_back(c);
      return true;
    });
  });
  std::vector<BitVec> words;
  for (auto& l : local)
    for (auto& v : l) words.push_back(std::move(v));
  std::sort(words.begin(), words.end());
  return words;
}

LinearCode project_fixed(const LinearCode& fixed, const Perm& sigma) {
  if (sigma.degree() != fixed.length()) throw std::invalid_argument("project_fixed: degree mismatch");
  std::vector<int> mins = pair_orbit_mins(sigma);
  for (int i = 0; i < fixed.dim(); ++i)
    if (!(sigma.apply(fixed.generator().row(i)) == fixed.generator().row(i)))
      throw std::invalid_argument("project_fixed: code is not pointwise fixed by sigma");
  int half = static_cast<int>(mins.size());
  BitMatrix m(0, half);
  for (int i = 0; i < fixed.dim(); ++i) {
    BitVec v(half);
    for (int j = 0; j < half; ++j)
      if (fixed.generator().row(i).get(mins[static_cast<size_t>(j)])) v.set(j, true);
    m.append_row(std::move(v));
  }
  return LinearCode::from_rows(m, half);
}

LinearCode lift_fixed(const LinearCode& half, const Perm& sigma) {
  std::vector<int> mins = pair_orbit_mins(sigma);
  if (static_cast<int>(mins.size()) != half.length())
    throw std::invalid_argument("lift_fixed: length must equal the orbit count of sigma");
  int n = sigma.degree();
  BitMatrix m(0, n);
  for (int i = 0; i < half.dim(); ++i) {
    BitVec v(n);
    for (size_t j = 0; j < mins.size(); ++j) {
      if (half.generator().row(i).get(static_cast<int>(j))) {
        v.set(mins[j], true);
        v.set(sigma.image(mins[j]), true);
      }
    }
    m.append_row(std::move(v));
  }
  return LinearCode::from_rows(m, n);
}

}  // namespace fixglue
