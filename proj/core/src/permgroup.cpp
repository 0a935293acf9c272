#include "fixglue/permgroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fixglue/util.hpp"

namespace fixglue {

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::symmetric(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.natural_symmetric_ = true;
  if (degree >= 2) {
    Perm t(degree);
    t = Perm::from_cycles(degree, "(1,2)");
    g.gens_.push_back(t);
    if (degree >= 3) {
      std::vector<int> img(static_cast<size_t>(degree));
      for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = (i + 1) % degree;
      g.gens_.push_back(Perm::from_images(std::move(img)));
    }
  }
  return g;
}

PermGroup PermGroup::generated(int degree, std::vector<Perm> gens) {
  PermGroup g;
  g.degree_ = degree;
  for (Perm& p : gens) {
    if (p.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!p.is_identity()) g.gens_.push_back(std::move(p));
  }
  return g;
}

void PermGroup::set_base_hint(std::vector<int> hint) {
  if (chain_built_) throw std::logic_error("PermGroup: base hint after chain build");
  base_hint_ = std::move(hint);
}

int PermGroup::pick_base(const Perm& g, const std::vector<int>& used) const {
  auto is_used = [&](int x) { return std::find(used.begin(), used.end(), x) != used.end(); };
  for (int h : base_hint_)
    if (!is_used(h) && g.image(h) != h) return h;
  for (int x = 0; x < degree_; ++x)
    if (!is_used(x) && g.image(x) != x) return x;
  return -1;
}

namespace {

void recompute_orbit(PermGroup::Level& lv, const std::vector<const Perm*>& gens, int degree) {
  lv.orbit.clear();
  lv.orbit_pos.assign(static_cast<size_t>(degree), -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base);
  lv.orbit_pos[static_cast<size_t>(lv.base)] = 0;
  lv.transversal.push_back(Perm(degree));
  for (size_t q = 0; q < lv.orbit.size(); ++q) {
    int x = lv.orbit[q];
    for (const Perm* s : gens) {
      int y = s->image(x);
      if (lv.orbit_pos[static_cast<size_t>(y)] < 0) {
        lv.orbit_pos[static_cast<size_t>(y)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(lv.transversal[q] * (*s));
      }
    }
  }
}

}  // namespace

std::pair<Perm, size_t> PermGroup::sift_from(size_t level, Perm g) const {
  for (size_t l = level; l < chain_.size(); ++l) {
    if (g.is_identity()) return {g, l};
    int x = g.image(chain_[l].base);
    if (x == chain_[l].base) continue;
    int pos = chain_[l].orbit_pos[static_cast<size_t>(x)];
    if (pos < 0) return {g, l};
    g = g * chain_[l].transversal[static_cast<size_t>(pos)].inverse();
  }
  return {g, chain_.size()};
}

void PermGroup::build_chain() const {
  if (chain_built_) return;
  chain_.clear();

  auto gens_at = [&](size_t level) {
    std::vector<const Perm*> out;
    for (size_t l = level; l < chain_.size(); ++l)
      for (const Perm& p : chain_[l].gens) out.push_back(&p);
    return out;
  };
  auto used_bases = [&] {
    std::vector<int> b;
    for (const Level& lv : chain_) b.push_back(lv.base);
    return b;
  };
  auto assign = [&](Perm g) {
    // g fixes the bases of every level it passes; find its level.
    size_t i = 0;
    while (i < chain_.size() && g.image(chain_[i].base) == chain_[i].base) ++i;
    if (i == chain_.size()) {
      Level lv;
      lv.base = pick_base(g, used_bases());
      assert(lv.base >= 0);
      chain_.push_back(std::move(lv));
    }
    chain_[i].gens.push_back(std::move(g));
    for (size_t l = 0; l <= i; ++l) recompute_orbit(chain_[l], gens_at(l), degree_);
  };

  for (const Perm& g : gens_)
    if (!g.is_identity()) assign(g);

  // Sims: close each level under Schreier generators, deepest first.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = chain_.size(); i-- > 0 && !changed;) {
      auto gens = gens_at(i);
      recompute_orbit(chain_[i], gens, degree_);
      for (size_t q = 0; q < chain_[i].orbit.size() && !changed; ++q) {
        for (const Perm* s : gens) {
          int y = s->image(chain_[i].orbit[q]);
          int ypos = chain_[i].orbit_pos[static_cast<size_t>(y)];
          Perm schreier =
              chain_[i].transversal[q] * (*s) * chain_[i].transversal[static_cast<size_t>(ypos)].inverse();
          if (schreier.is_identity()) continue;
          auto [res, lvl] = sift_from(i + 1, std::move(schreier));
          if (!res.is_identity()) {
            assign(std::move(res));
            changed = true;
            break;
          }
        }
      }
    }
  }
  chain_built_ = true;
}

const std::vector<PermGroup::Level>& PermGroup::chain() const {
  build_chain();
  return chain_;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  if (natural_symmetric_) return true;
  if (g.is_identity()) return true;
  build_chain();
  auto [res, lvl] = sift_from(0, g);
  return res.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  for (const Perm& p : gens_)
    if (!g.contains(p)) return false;
  return true;
}

std::vector<uint64_t> PermGroup::basic_orbit_lengths() const {
  if (natural_symmetric_) {
    std::vector<uint64_t> v;
    for (int i = degree_; i >= 2; --i) v.push_back(static_cast<uint64_t>(i));
    return v;
  }
  build_chain();
  std::vector<uint64_t> v;
  for (const Level& lv : chain_) v.push_back(lv.orbit.size());
  return v;
}

bool PermGroup::has_u64_order() const {
  uint64_t o;
  return checked_product(basic_orbit_lengths(), o);
}

uint64_t PermGroup::order() const {
  uint64_t o;
  if (!checked_product(basic_orbit_lengths(), o)) throw std::overflow_error("PermGroup::order: exceeds 64 bits");
  return o;
}

std::string PermGroup::order_string() const { return product_decimal(basic_orbit_lengths()); }

std::vector<Perm> PermGroup::elements(uint64_t bound) const {
  uint64_t o;
  if (!checked_product(basic_orbit_lengths(), o) || o > bound)
    throw std::runtime_error("PermGroup::elements: order exceeds enumeration bound");
  build_chain();
  std::vector<Perm> out;
  out.reserve(o);
  // one element per tuple of base images
  auto rec = [&](auto&& self, size_t lvl, const Perm& w) -> void {
    if (lvl == chain_.size()) {
      out.push_back(w);
      return;
    }
    for (const Perm& t : chain_[lvl].transversal) self(self, lvl + 1, t * w);
  };
  rec(rec, 0, Perm(degree_));
  return out;
}

std::optional<std::vector<Perm>> PermGroup::stabilizer_generators(const std::vector<int>& prefix) const {
  build_chain();
  // the chain base must begin with exactly the points of prefix that it uses,
  // in order; points of prefix fixed by the whole group may be skipped
  size_t lvl = 0;
  for (int p : prefix) {
    if (lvl < chain_.size() && chain_[lvl].base == p) {
      ++lvl;
      continue;
    }
    // p must be fixed by the stabilizer reached so far
    for (size_t l = lvl; l < chain_.size(); ++l)
      for (const Perm& g : chain_[l].gens)
        if (g.image(p) != p) return std::nullopt;
  }
  std::vector<Perm> out;
  for (size_t l = lvl; l < chain_.size(); ++l)
    for (const Perm& g : chain_[l].gens) out.push_back(g);
  return out;
}

std::vector<Perm> PermGroup::right_transversal(const PermGroup& h, uint64_t max_index) const {
  if (h.degree() != degree_) throw std::invalid_argument("right_transversal: degree mismatch");
  if (!h.is_subgroup_of(*this)) throw std::invalid_argument("right_transversal: H is not a subgroup of G");
  uint64_t og, oh;
  if (!checked_product(basic_orbit_lengths(), og) || !checked_product(h.basic_orbit_lengths(), oh))
    throw std::runtime_error("right_transversal: group order exceeds 64 bits");
  uint64_t index = og / oh;
  if (index > max_index) throw std::runtime_error("right_transversal: index exceeds bound");

  std::vector<Perm> reps{Perm(degree_)};
  std::vector<Perm> rep_inv{Perm(degree_)};
  for (size_t q = 0; q < reps.size() && reps.size() < index; ++q) {
    for (const Perm& s : gens_) {
      Perm c = reps[q] * s;
      bool known = false;
      for (const Perm& ri : rep_inv) {
        if (h.contains(c * ri)) {
          known = true;
          break;
        }
      }
      if (!known) {
        rep_inv.push_back(c.inverse());
        reps.push_back(std::move(c));
        if (reps.size() == index) break;
      }
    }
  }
  if (reps.size() != index) throw std::runtime_error("right_transversal: enumeration incomplete");
  return reps;
}

std::vector<Perm> PermGroup::involution_class_reps(bool fpf_only, uint64_t bound) const {
  std::vector<Perm> elems = elements(bound);
  std::unordered_set<Perm, PermHash> invs;
  for (const Perm& g : elems)
    if (g.is_involution() && (!fpf_only || g.is_fixed_point_free())) invs.insert(g);

  std::vector<Perm> reps;
  std::unordered_set<Perm, PermHash> seen;
  // deterministic: scan involutions in sorted order
  std::vector<Perm> sorted(invs.begin(), invs.end());
  std::sort(sorted.begin(), sorted.end());
  for (const Perm& start : sorted) {
    if (seen.count(start)) continue;
    // conjugation orbit under the group generators
    std::vector<Perm> queue{start};
    seen.insert(start);
    Perm best = start;
    for (size_t q = 0; q < queue.size(); ++q) {
      for (const Perm& s : gens_) {
        Perm c = queue[q].conjugated_by(s);
        if (!seen.count(c)) {
          seen.insert(c);
          if (c < best) best = c;
          queue.push_back(std::move(c));
        }
      }
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::optional<PermGroup> sym_centralizer_free_abelian2(int degree, const std::vector<Perm>& gens) {
  std::vector<Perm> nt;
  for (const Perm& g : gens)
    if (!g.is_identity()) nt.push_back(g);
  if (nt.empty()) return std::nullopt;
  // reduce to independent generators: greedily keep gens enlarging the span
  std::vector<Perm> indep;
  std::vector<Perm> span{Perm(degree)};
  for (const Perm& g : nt) {
    bool inside = std::find(span.begin(), span.end(), g) != span.end();
    if (inside) continue;
    size_t old = span.size();
    for (size_t i = 0; i < old; ++i) span.push_back(span[i] * g);
    indep.push_back(g);
  }
  // label points by (orbit, mask) via the shared analyzer in perm.cpp
  std::optional<Perm> probe = elem_abelian2_conjugator(indep, indep);
  if (!probe) return std::nullopt;  // not a free action of an elementary abelian 2-group

  int r = static_cast<int>(indep.size());
  uint32_t sz = uint32_t{1} << r;
  // rebuild the labeling here (orbit base = smallest unvisited point)
  std::vector<Perm> elem(sz, Perm(degree));
  for (uint32_t m = 1; m < sz; ++m) {
    uint32_t low = m & (m - 1);
    elem[m] = low ? elem[low] * indep[static_cast<size_t>(std::countr_zero(m ^ low))]
                  : indep[static_cast<size_t>(std::countr_zero(m))];
  }
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(static_cast<size_t>(degree), false);
  for (int b = 0; b < degree; ++b) {
    if (seen[static_cast<size_t>(b)]) continue;
    std::vector<int> pts(sz);
    for (uint32_t m = 0; m < sz; ++m) {
      pts[m] = elem[m].image(b);
      seen[static_cast<size_t>(pts[m])] = true;
    }
    orbits.push_back(std::move(pts));
  }

  std::vector<Perm> out_gens;
  // per-orbit translations by each independent generator
  for (size_t j = 0; j < orbits.size(); ++j) {
    for (int i = 0; i < r; ++i) {
      std::vector<int> img(static_cast<size_t>(degree));
      for (int x = 0; x < degree; ++x) img[static_cast<size_t>(x)] = x;
      for (uint32_t m = 0; m < sz; ++m)
        img[static_cast<size_t>(orbits[j][m])] = orbits[j][m ^ (uint32_t{1} << i)];
      out_gens.push_back(Perm::from_images(std::move(img)));
    }
  }
  // equivariant adjacent orbit swaps
  for (size_t j = 0; j + 1 < orbits.size(); ++j) {
    std::vector<int> img(static_cast<size_t>(degree));
    for (int x = 0; x < degree; ++x) img[static_cast<size_t>(x)] = x;
    for (uint32_t m = 0; m < sz; ++m) {
      img[static_cast<size_t>(orbits[j][m])] = orbits[j + 1][m];
      img[static_cast<size_t>(orbits[j + 1][m])] = orbits[j][m];
    }
    out_gens.push_back(Perm::from_images(std::move(img)));
  }
  return PermGroup::generated(degree, std::move(out_gens));
}

namespace {

// Generic backtrack for C_G(H) over G's stabilizer chain. Partial point maps
// are propagated through H's generators; the known part of the centralizer
// prunes first-level candidates to orbit minima.
class CentralizerSearch {
 public:
  CentralizerSearch(const PermGroup& g, const PermGroup& h) : g_(g), h_(h), degree_(g.degree()) {}

  PermGroup run() {
    found_ = PermGroup::trivial(degree_);
    const auto& chain = g_.chain();
    if (chain.empty()) return found_;  // trivial group
    std::vector<int> img(static_cast<size_t>(degree_), -1), pre(static_cast<size_t>(degree_), -1);
    dfs(0, Perm(degree_), img, pre);
    return found_;
  }

 private:
  bool propagate(std::vector<int>& img, std::vector<int>& pre, int x, int y) {
    // force x -> y and close under commutation with H's generators
    std::vector<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (img[static_cast<size_t>(a)] == b) continue;
      if (img[static_cast<size_t>(a)] != -1 || pre[static_cast<size_t>(b)] != -1) return false;
      img[static_cast<size_t>(a)] = b;
      pre[static_cast<size_t>(b)] = a;
      for (const Perm& hgen : h_.generators()) queue.push_back({hgen.image(a), hgen.image(b)});
    }
    return true;
  }

  void dfs(size_t level, const Perm& w, const std::vector<int>& img, const std::vector<int>& pre) {
    const auto& chain = g_.chain();
    if (level == chain.size()) {
      // w is fully determined; verify exact commutation
      for (const Perm& hgen : h_.generators())
        if (!(w * hgen == hgen * w)) return;
      if (!found_.contains(w)) {
        std::vector<Perm> gens = found_.generators();
        gens.push_back(w);
        found_ = PermGroup::generated(degree_, std::move(gens));
      }
      return;
    }
    const auto& lv = chain[level];
    // candidate images of the base point, ascending for the orbit-minimum rule
    std::vector<std::pair<int, size_t>> cand;
    for (size_t i = 0; i < lv.orbit.size(); ++i) cand.push_back({w.image(lv.orbit[i]), i});
    std::sort(cand.begin(), cand.end());
    for (auto [y, i] : cand) {
      int forced = img[static_cast<size_t>(lv.base)];
      if (forced != -1 && forced != y) continue;
      if (level == 0 && !min_in_found_orbit(y)) continue;
      std::vector<int> img2 = img, pre2 = pre;
      if (forced == -1 && !propagate(img2, pre2, lv.base, y)) continue;
      dfs(level + 1, lv.transversal[i] * w, img2, pre2);
    }
  }

  bool min_in_found_orbit(int y) {
    // y survives iff no smaller point lies in its orbit under found_
    std::vector<int> orb{y};
    std::vector<bool> seen(static_cast<size_t>(degree_), false);
    seen[static_cast<size_t>(y)] = true;
    for (size_t q = 0; q < orb.size(); ++q) {
      for (const Perm& s : found_.generators()) {
        int z = s.image(orb[q]);
        if (!seen[static_cast<size_t>(z)]) {
          if (z < y) return false;
          seen[static_cast<size_t>(z)] = true;
          orb.push_back(z);
        }
      }
    }
    return true;
  }

  const PermGroup& g_;
  const PermGroup& h_;
  int degree_;
  PermGroup found_;
};

}  // namespace

PermGroup PermGroup::centralizer(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("centralizer: degree mismatch");
  if (h.generators().empty()) return g;
  if (g.is_natural_symmetric()) {
    auto structural = sym_centralizer_free_abelian2(g.degree(), h.generators());
    if (structural) return *structural;
  }
  CentralizerSearch search(g, h);
  return search.run();
}

}  // namespace fixglue
