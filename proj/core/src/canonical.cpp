#include "fixglue/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fixglue {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ull;

uint64_t fnv_step(uint64_t h, uint64_t x) {
  h ^= x;
  h *= 0x100000001b3ull;
  return h;
}

struct Partition {
  std::vector<std::vector<int>> cells;  // members ascending
  std::vector<int> cell_of;

  static Partition unit(int n) {
    Partition p;
    p.cells.emplace_back(static_cast<size_t>(n));
    std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
    p.cell_of.assign(static_cast<size_t>(n), 0);
    return p;
  }

  bool discrete() const {
    for (const auto& c : cells)
      if (c.size() > 1) return false;
    return true;
  }

  int target_cell() const {
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) return static_cast<int>(i);
    return -1;
  }

  int max_cell() const {
    size_t m = 0;
    for (const auto& c : cells) m = std::max(m, c.size());
    return static_cast<int>(m);
  }

  void rebuild_cell_of(int n) {
    cell_of.assign(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < cells.size(); ++i)
      for (int c : cells[i]) cell_of[static_cast<size_t>(c)] = static_cast<int>(i);
  }
};

using Layers = std::vector<std::vector<BitVec>>;

// Splits cells by word-incidence invariants until stable. Appends one
// label-independent token per round to the trace.
void refine(Partition& p, const Layers& layers, int n, std::vector<uint64_t>& trace) {
  for (;;) {
    std::vector<std::vector<uint64_t>> key(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
      key[static_cast<size_t>(c)].push_back(static_cast<uint64_t>(p.cell_of[static_cast<size_t>(c)]));
    for (const auto& words : layers) {
      // classify words by their cell-intersection pattern
      std::map<std::vector<std::pair<int, int>>, int> pattern_id;
      std::vector<std::vector<std::pair<int, int>>> word_pattern(words.size());
      for (size_t wi = 0; wi < words.size(); ++wi) {
        std::map<int, int> count;
        for (int b : words[wi].support()) ++count[p.cell_of[static_cast<size_t>(b)]];
        word_pattern[wi].assign(count.begin(), count.end());
        pattern_id.emplace(word_pattern[wi], 0);
      }
      int id = 0;
      for (auto& [pat, pid] : pattern_id) pid = id++;
      std::vector<std::vector<int>> sig(static_cast<size_t>(n));
      for (size_t wi = 0; wi < words.size(); ++wi) {
        int pid = pattern_id[word_pattern[wi]];
        for (int b : words[wi].support()) sig[static_cast<size_t>(b)].push_back(pid);
      }
      for (int c = 0; c < n; ++c) {
        auto& s = sig[static_cast<size_t>(c)];
        std::sort(s.begin(), s.end());
        key[static_cast<size_t>(c)].push_back(~uint64_t{0});  // layer separator
        for (int v : s) key[static_cast<size_t>(c)].push_back(static_cast<uint64_t>(v));
      }
    }

    std::vector<std::vector<int>> newcells;
    newcells.reserve(p.cells.size());
    bool changed = false;
    uint64_t round_hash = kFnvOffset;
    for (const auto& cell : p.cells) {
      std::map<std::vector<uint64_t>, std::vector<int>> groups;
      for (int c : cell) groups[key[static_cast<size_t>(c)]].push_back(c);
      if (groups.size() > 1) changed = true;
      for (auto& [gkey, members] : groups) {
        round_hash = fnv_step(round_hash, members.size());
        for (uint64_t t : gkey) round_hash = fnv_step(round_hash, t);
        newcells.push_back(std::move(members));
      }
    }
    p.cells = std::move(newcells);
    p.rebuild_cell_of(n);
    trace.push_back(round_hash);
    if (!changed) break;
  }
}

Partition individualize(const Partition& p, int cell_idx, int v, int n) {
  Partition q;
  q.cells.reserve(p.cells.size() + 1);
  for (size_t i = 0; i < p.cells.size(); ++i) {
    if (static_cast<int>(i) != cell_idx) {
      q.cells.push_back(p.cells[i]);
      continue;
    }
    q.cells.push_back({v});
    std::vector<int> rest;
    rest.reserve(p.cells[i].size() - 1);
    for (int c : p.cells[i])
      if (c != v) rest.push_back(c);
    q.cells.push_back(std::move(rest));
  }
  q.rebuild_cell_of(n);
  return q;
}

Matching matching_image(const Matching& m, const Perm& sigma) {
  Matching out;
  out.reserve(m.size());
  for (auto [a, b] : m) {
    int x = sigma.image(a), y = sigma.image(b);
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -1: leaves below may still beat best; +1: none can; 0: tied so far.
int node_vs_best(const std::vector<uint64_t>& node, const std::vector<uint64_t>& best) {
  size_t m = std::min(node.size(), best.size());
  for (size_t i = 0; i < m; ++i) {
    if (node[i] != best[i]) return node[i] < best[i] ? -1 : 1;
  }
  if (node.size() >= best.size()) return 1;  // children strictly extend a full leaf key
  return 0;
}

int trace_compare(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

struct BudgetExceeded {};

class IRSearch {
 public:
  IRSearch(const LinearCode& code, const Matching* matching, uint64_t bound)
      : code_(code), n_(code.length()), bound_(bound) {
    if (matching) {
      matching_ = *matching;
      std::sort(matching_.begin(), matching_.end());
      has_matching_ = true;
    }
    build_layers();
    root_ = Partition::unit(n_);
    refine(root_, layers_, n_, root_trace_);
    build_first_path();
    gamma_ = PermGroup::trivial(n_);
    gamma_.set_base_hint(first_points_);
  }

  // Full automorphism group of the (code, matching) structure.
  PermGroup aut() {
    run_aut_phase();
    return gamma_;
  }

  // A permutation w with this->code^w == other.code (matching-compatible), if
  // one exists. Searches this side's tree against the other side's first leaf.
  std::optional<Perm> find_iso(IRSearch& other) {
    if (root_trace_ != other.root_trace_) return std::nullopt;
    iso_target_ = &other.first_leaf_;
    iso_target_traces_ = &other.first_traces_;
    iso_result_.reset();
    dfs_aut(root_, root_trace_, 0, true);
    iso_target_ = nullptr;
    iso_target_traces_ = nullptr;
    if (!iso_result_) return std::nullopt;
    return *iso_result_ * other.first_leaf_.sigma.inverse();
  }

  // Lexicographically minimal (trace, matrix, matching) over the leaves, with
  // automorphism and bound pruning. budget = 0 means unlimited; otherwise
  // BudgetExceeded is thrown after that many search nodes.
  CanonicalForm canonical(uint64_t budget = 0) {
    run_aut_phase();
    budget_ = budget;
    nodes_ = 0;
    best_ = first_leaf_;
    dfs_canon(root_, root_trace_, 0, true);
    CanonicalForm cf;
    cf.code = best_.code;
    cf.transform = best_.sigma;
    cf.trace = best_.trace;
    cf.matching = best_.match;
    return cf;
  }

 private:
  struct Leaf {
    Perm sigma;
    LinearCode code;
    Matching match;
    std::vector<uint64_t> trace;
  };

  void build_layers() {
    if (has_matching_) {
      std::vector<BitVec> edges;
      for (auto [a, b] : matching_) {
        BitVec v(n_);
        v.set(a, true);
        v.set(b, true);
        edges.push_back(std::move(v));
      }
      layers_.push_back(std::move(edges));
    }
    if (code_.dim() == 0) return;
    auto [d, words] = code_.min_weight_words(1, bound_);
    int last_w = d;
    layers_.push_back(std::move(words));
    // escalate to further weight classes while the partition stays coarse
    std::optional<WeightEnumerator> we;
    for (int esc = 0; esc < 2; ++esc) {
      Partition probe = Partition::unit(n_);
      std::vector<uint64_t> tr;
      refine(probe, layers_, n_, tr);
      if (probe.max_cell() <= 8) break;
      if (!we) we = code_.weight_enumerator(1, bound_);
      int next_w = -1;
      for (int w = last_w + 1; w < n_; ++w) {
        if (we->counts[static_cast<size_t>(w)] > 0 && we->counts[static_cast<size_t>(w)] <= 50000) {
          next_w = w;
          break;
        }
      }
      if (next_w < 0) break;
      layers_.push_back(code_.words_of_weight(next_w, 1, bound_));
      last_w = next_w;
    }
  }

  Leaf make_leaf(const Partition& p, const std::vector<uint64_t>& trace) {
    std::vector<int> img(static_cast<size_t>(n_));
    for (size_t i = 0; i < p.cells.size(); ++i) img[static_cast<size_t>(p.cells[i][0])] = static_cast<int>(i);
    Leaf lf;
    lf.sigma = Perm::from_images(std::move(img));
    lf.code = code_.image(lf.sigma);
    if (has_matching_) lf.match = matching_image(matching_, lf.sigma);
    lf.trace = trace;
    return lf;
  }

  void build_first_path() {
    first_traces_.clear();
    first_points_.clear();
    Partition p = root_;
    std::vector<uint64_t> trace = root_trace_;
    first_traces_.push_back(trace);
    while (!p.discrete()) {
      int t = p.target_cell();
      int v = p.cells[static_cast<size_t>(t)][0];
      first_points_.push_back(v);
      p = individualize(p, t, v, n_);
      refine(p, layers_, n_, trace);
      first_traces_.push_back(trace);
    }
    first_leaf_ = make_leaf(p, trace);
    sigma0_inv_ = first_leaf_.sigma.inverse();
  }

  void run_aut_phase() {
    if (aut_done_) return;
    dfs_aut(root_, root_trace_, 0, true);
    aut_done_ = true;
  }

  void add_gamma(const Perm& g) {
    std::vector<Perm> gens = gamma_.generators();
    gens.push_back(g);
    gamma_ = PermGroup::generated(n_, std::move(gens));
    gamma_.set_base_hint(first_points_);
  }

  // Union of gamma-stabilizer orbits of the given points, for skipping
  // candidates already covered by known automorphisms.
  std::vector<bool> orbit_union(const std::vector<int>& pts, size_t depth) {
    std::vector<bool> mark(static_cast<size_t>(n_), false);
    for (int p : pts) mark[static_cast<size_t>(p)] = true;
    std::vector<int> prefix(first_points_.begin(), first_points_.begin() + static_cast<long>(depth));
    auto gens = gamma_.stabilizer_generators(prefix);
    if (!gens || gens->empty()) return mark;
    std::vector<int> queue = pts;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (const Perm& s : *gens) {
        int y = s.image(x);
        if (!mark[static_cast<size_t>(y)]) {
          mark[static_cast<size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
    return mark;
  }

  // Automorphism / isomorphism search. Returns true when the caller should
  // unwind to the deepest first-path ancestor (an automorphism was found, or
  // an isomorphism ended the search).
  bool dfs_aut(const Partition& p, const std::vector<uint64_t>& trace, size_t depth, bool on_path) {
    if (p.discrete()) {
      Leaf lf = make_leaf(p, trace);
      if (iso_target_ && lf.code == iso_target_->code && lf.match == iso_target_->match) {
        iso_result_ = lf.sigma;
        return true;
      }
      if (lf.code == first_leaf_.code && lf.match == first_leaf_.match) {
        Perm g = lf.sigma * sigma0_inv_;
        if (!g.is_identity() && !gamma_.contains(g)) {
          add_gamma(g);
          // backjump to the first path; only sound for the pure automorphism
          // search, so isomorphism runs keep walking
          return iso_target_ == nullptr;
        }
      }
      return false;
    }
    int t = p.target_cell();
    const std::vector<int> cands = p.cells[static_cast<size_t>(t)];
    std::vector<int> explored;
    const auto& target_traces = iso_target_traces_ ? *iso_target_traces_ : first_traces_;
    for (int v : cands) {
      if (on_path && !explored.empty()) {
        std::vector<bool> covered = orbit_union(explored, depth);
        if (covered[static_cast<size_t>(v)]) continue;
      }
      Partition child = individualize(p, t, v, n_);
      std::vector<uint64_t> ctrace = trace;
      refine(child, layers_, n_, ctrace);
      explored.push_back(v);
      if (depth + 1 >= target_traces.size() || ctrace != target_traces[depth + 1]) continue;
      bool child_on_path = on_path && depth < first_points_.size() && v == first_points_[depth];
      if (dfs_aut(child, ctrace, depth + 1, child_on_path)) {
        if (iso_result_) return true;   // found: unwind everything
        if (!on_path) return true;      // pass the backjump upward
        // on the first path: absorb the jump and continue with the richer group
      }
    }
    return false;
  }

  void dfs_canon(const Partition& p, const std::vector<uint64_t>& trace, size_t depth, bool on_path) {
    if (budget_ && ++nodes_ > budget_) throw BudgetExceeded{};
    if (p.discrete()) {
      Leaf lf = make_leaf(p, trace);
      int c = trace_compare(lf.trace, best_.trace);
      if (c == 0) c = lex_compare(lf.code.generator(), best_.code.generator());
      if (c == 0 && lf.match != best_.match) c = lf.match < best_.match ? -1 : 1;
      if (c < 0) {
        best_ = lf;
      } else if (c == 0) {
        Perm g = lf.sigma * best_.sigma.inverse();
        if (!g.is_identity() && !gamma_.contains(g)) add_gamma(g);
      }
      return;
    }
    int t = p.target_cell();
    const std::vector<int> cands = p.cells[static_cast<size_t>(t)];
    std::vector<int> explored;
    for (int v : cands) {
      if (budget_ && ++nodes_ > budget_) throw BudgetExceeded{};
      if (on_path && !explored.empty()) {
        std::vector<bool> covered = orbit_union(explored, depth);
        if (covered[static_cast<size_t>(v)]) continue;
      }
      Partition child = individualize(p, t, v, n_);
      std::vector<uint64_t> ctrace = trace;
      refine(child, layers_, n_, ctrace);
      explored.push_back(v);
      // a discrete child is a leaf: the leaf handler does the full comparison
      if (child.discrete() || node_vs_best(ctrace, best_.trace) <= 0) {
        bool child_on_path = on_path && depth < first_points_.size() && v == first_points_[depth];
        dfs_canon(child, ctrace, depth + 1, child_on_path);
      }
    }
  }

  LinearCode code_;
  int n_;
  uint64_t bound_;
  Matching matching_;
  bool has_matching_ = false;
  Layers layers_;
  Partition root_;
  std::vector<uint64_t> root_trace_;
  std::vector<std::vector<uint64_t>> first_traces_;
  std::vector<int> first_points_;
  Leaf first_leaf_;
  Perm sigma0_inv_;
  PermGroup gamma_;
  bool aut_done_ = false;
  Leaf best_;
  const Leaf* iso_target_ = nullptr;
  const std::vector<std::vector<uint64_t>>* iso_target_traces_ = nullptr;
  std::optional<Perm> iso_result_;
  uint64_t budget_ = 0;
  uint64_t nodes_ = 0;
};

// Degenerate codes whose automorphism group is the whole symmetric group.
bool fully_symmetric(const LinearCode& c) { return c.dim() == 0 || c.dim() == c.length(); }

CanonicalForm trivial_canonical(const LinearCode& c, const Matching* m) {
  CanonicalForm cf;
  cf.transform = Perm(c.length());
  if (m) {
    // map the pairs onto the standard pairing (1,2)(3,4)... in order
    Matching sorted = *m;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> img(static_cast<size_t>(c.length()), -1);
    int pos = 0;
    for (auto [a, b] : sorted) {
      img[static_cast<size_t>(a)] = pos++;
      img[static_cast<size_t>(b)] = pos++;
    }
    for (auto& x : img)
      if (x < 0) x = pos++;
    cf.transform = Perm::from_images(std::move(img));
    cf.matching = matching_image(sorted, cf.transform);
  }
  cf.code = c.image(cf.transform);
  cf.trace = {static_cast<uint64_t>(c.dim())};
  return cf;
}

}  // namespace

PermGroup aut_brute_force(const LinearCode& c) {
  if (c.length() > 10) throw std::invalid_argument("aut_brute_force: length too large");
  std::vector<int> img(static_cast<size_t>(c.length()));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> found;
  do {
    Perm p = Perm::from_images(img);
    if (c.image(p) == c) found.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::generated(c.length(), std::move(found));
}

PermGroup automorphism_group(const LinearCode& c, AutAlgorithm alg, uint64_t enumeration_bound) {
  if (alg == AutAlgorithm::kBruteForce || (alg == AutAlgorithm::kAuto && c.length() <= 8)) return aut_brute_force(c);
  if (fully_symmetric(c)) return PermGroup::symmetric(c.length());
  IRSearch search(c, nullptr, enumeration_bound);
  return search.aut();
}

CanonicalForm canonical_form(const LinearCode& c) {
  if (fully_symmetric(c)) return trivial_canonical(c, nullptr);
  IRSearch search(c, nullptr, kDefaultEnumerationBound);
  return search.canonical();
}

std::optional<CanonicalForm> canonical_form_budgeted(const LinearCode& c, uint64_t node_budget) {
  if (fully_symmetric(c)) return trivial_canonical(c, nullptr);
  IRSearch search(c, nullptr, kDefaultEnumerationBound);
  try {
    return search.canonical(node_budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::optional<Perm> code_equivalence(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dim() != b.dim())
    throw std::invalid_argument("code_equivalence: parameter mismatch");
  if (a.dim() > 0 && (uint64_t{1} << a.dim()) <= kDefaultEnumerationBound) {
    if (!(a.weight_enumerator() == b.weight_enumerator())) return std::nullopt;
  }
  if (fully_symmetric(a)) return Perm(a.length());
  IRSearch sa(a, nullptr, kDefaultEnumerationBound);
  IRSearch sb(b, nullptr, kDefaultEnumerationBound);
  auto w = sa.find_iso(sb);
  assert(!w || a.image(*w) == b);
  return w;
}

PermGroup structure_automorphisms(const LinearCode& c, const Matching& m) {
  if (fully_symmetric(c)) {
    // matching-preserving permutations = centralizer of the pairing involution
    std::vector<int> img(static_cast<size_t>(c.length()));
    std::iota(img.begin(), img.end(), 0);
    for (auto [a, b] : m) {
      img[static_cast<size_t>(a)] = b;
      img[static_cast<size_t>(b)] = a;
    }
    auto cz = sym_centralizer_free_abelian2(c.length(), {Perm::from_images(std::move(img))});
    if (cz) return *cz;
  }
  IRSearch search(c, &m, kDefaultEnumerationBound);
  return search.aut();
}

CanonicalForm structure_canonical_form(const LinearCode& c, const Matching& m) {
  if (fully_symmetric(c)) return trivial_canonical(c, &m);
  IRSearch search(c, &m, kDefaultEnumerationBound);
  return search.canonical();
}

std::optional<Perm> structure_iso(const LinearCode& a, const Matching& ma, const LinearCode& b, const Matching& mb) {
  if (a.length() != b.length() || a.dim() != b.dim()) return std::nullopt;
  if (fully_symmetric(a) && fully_symmetric(b)) {
    CanonicalForm ca = trivial_canonical(a, &ma), cb = trivial_canonical(b, &mb);
    if (!(ca.code == cb.code) || ca.matching != cb.matching) return std::nullopt;
    return ca.transform * cb.transform.inverse();
  }
  IRSearch sa(a, &ma, kDefaultEnumerationBound);
  IRSearch sb(b, &mb, kDefaultEnumerationBound);
  auto w = sa.find_iso(sb);
  assert(!w || (a.image(*w) == b));
  return w;
}

}  // namespace fixglue
