#include "fixglue/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fixglue {

Perm::Perm(int degree) {
  if (degree < 1) throw std::invalid_argument("Perm: degree must be >= 1");
  img_.resize(static_cast<size_t>(degree));
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int x : images) {
    if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Perm::from_images: not a bijection");
    seen[static_cast<size_t>(x)] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int degree, std::string_view s) {
  Perm p(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("Perm::from_cycles: expected '('");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("Perm::from_cycles: expected point");
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("Perm::from_cycles: point out of range");
      cyc.push_back(v - 1);
      skip_ws();
      if (i < s.size() && (s[i] == ',' || s[i] == ' ')) {
        ++i;
        skip_ws();
      }
    }
    if (i >= s.size()) throw std::invalid_argument("Perm::from_cycles: missing ')'");
    ++i;  // ')'
    for (size_t j = 0; j + 1 < cyc.size(); ++j) {
      if (p.img_[static_cast<size_t>(cyc[j])] != cyc[j])
        throw std::invalid_argument("Perm::from_cycles: repeated point");
      p.img_[static_cast<size_t>(cyc[j])] = cyc[j + 1];
    }
    if (cyc.size() > 1) {
      if (p.img_[static_cast<size_t>(cyc.back())] != cyc.back())
        throw std::invalid_argument("Perm::from_cycles: repeated point");
      p.img_[static_cast<size_t>(cyc.back())] = cyc.front();
    }
    skip_ws();
  }
  return p;
}

std::optional<Perm> Perm::parse(int degree, std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return std::nullopt;
  try {
    if (s[b] == '(') return from_cycles(degree, s);
    if (s[b] == '[') {
      std::vector<int> img;
      size_t i = b + 1;
      while (i < s.size() && s[i] != ']') {
        while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != ']') ++i;
        if (i >= s.size() || s[i] == ']') break;
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        img.push_back(v - 1);  // 1-based on the wire
      }
      if (static_cast<int>(img.size()) != degree) return std::nullopt;
      return from_images(std::move(img));
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

bool Perm::is_involution() const {
  bool moved = false;
  for (int i = 0; i < degree(); ++i) {
    int j = img_[static_cast<size_t>(i)];
    if (j != i) moved = true;
    if (img_[static_cast<size_t>(j)] != i) return false;
  }
  return moved;
}

bool Perm::is_fixed_point_free() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<size_t>(i)] == i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = o.img_[static_cast<size_t>(img_[i])];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::conjugated_by(const Perm& t) const { return t.inverse() * (*this) * t; }

BitVec Perm::apply(const BitVec& v) const {
  if (v.size() != degree()) throw std::invalid_argument("Perm::apply: length mismatch");
  BitVec out(v.size());
  for (int i = 0; i < v.size(); ++i)
    if (v.get(i)) out.set(img_[static_cast<size_t>(i)], true);
  return out;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) continue;
    std::vector<int> cyc;
    int x = i;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      cyc.push_back(x);
      x = img_[static_cast<size_t>(x)];
    }
    out.push_back(std::move(cyc));
  }
  return out;  // already sorted by smallest point: outer loop ascending
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, x = i;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      ++len;
      x = img_[static_cast<size_t>(x)];
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Perm::to_cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

uint64_t Perm::hash() const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (int x : img_) {
    h ^= static_cast<uint64_t>(x);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::optional<Perm> conjugator_in_sym(const Perm& s, const Perm& target) {
  if (s.degree() != target.degree()) throw std::invalid_argument("conjugator_in_sym: degree mismatch");
  auto full_cycles = [](const Perm& p) {
    // all cycles including fixed points, ordered by (length, smallest point)
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
    for (int i = 0; i < p.degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      std::vector<int> cyc;
      int x = i;
      while (!seen[static_cast<size_t>(x)]) {
        seen[static_cast<size_t>(x)] = true;
        cyc.push_back(x);
        x = p.image(x);
      }
      out.push_back(std::move(cyc));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  };
  auto cs = full_cycles(s), ct = full_cycles(target);
  if (cs.size() != ct.size()) return std::nullopt;
  std::vector<int> img(static_cast<size_t>(s.degree()), -1);
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].size() != ct[i].size()) return std::nullopt;
    for (size_t j = 0; j < cs[i].size(); ++j) img[static_cast<size_t>(cs[i][j])] = ct[i][j];
  }
  return Perm::from_images(std::move(img));
}

namespace {

// Labels every point of a free elementary abelian 2-group action by
// (orbit index, subgroup element mask); returns false if the action is not
// free or the generators do not satisfy the assumptions.
struct FreeAction {
  int r = 0;
  std::vector<std::vector<int>> orbit_points;  // [orbit][mask] -> point
};

bool analyze_free_action(const std::vector<Perm>& gens, FreeAction& out) {
  if (gens.empty()) return false;
  int n = gens[0].degree();
  int r = static_cast<int>(gens.size());
  if (r > 20) return false;
  for (const Perm& g : gens) {
    if (g.degree() != n || !g.is_involution()) return false;
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!(gens[static_cast<size_t>(i)] * gens[static_cast<size_t>(j)] ==
            gens[static_cast<size_t>(j)] * gens[static_cast<size_t>(i)]))
        return false;
  // all nontrivial products must be fixed point free (free action)
  std::vector<Perm> elem(size_t{1} << r, Perm(n));
  for (uint32_t m = 1; m < (uint32_t{1} << r); ++m) {
    uint32_t low = m & (m - 1);
    elem[m] = low ? elem[low] * gens[static_cast<size_t>(std::countr_zero(m ^ low))]
                  : gens[static_cast<size_t>(std::countr_zero(m))];
    if (!elem[m].is_fixed_point_free()) return false;
  }
  if (n % (1 << r) != 0) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  out.r = r;
  out.orbit_points.clear();
  for (int b = 0; b < n; ++b) {
    if (seen[static_cast<size_t>(b)]) continue;
    std::vector<int> pts(size_t{1} << r);
    for (uint32_t m = 0; m < (uint32_t{1} << r); ++m) pts[m] = elem[m].image(b);
    for (int x : pts) {
      if (seen[static_cast<size_t>(x)]) return false;  // duplicate: action not free
      seen[static_cast<size_t>(x)] = true;
    }
    out.orbit_points.push_back(std::move(pts));
  }
  return true;
}

}  // namespace

std::optional<Perm> elem_abelian2_conjugator(const std::vector<Perm>& from, const std::vector<Perm>& to) {
  if (from.size() != to.size() || from.empty()) return std::nullopt;
  if (from[0].degree() != to[0].degree()) return std::nullopt;
  FreeAction fa, fb;
  if (!analyze_free_action(from, fa) || !analyze_free_action(to, fb)) return std::nullopt;
  if (fa.orbit_points.size() != fb.orbit_points.size()) return std::nullopt;
  std::vector<int> img(static_cast<size_t>(from[0].degree()));
  for (size_t j = 0; j < fa.orbit_points.size(); ++j)
    for (size_t m = 0; m < fa.orbit_points[j].size(); ++m)
      img[static_cast<size_t>(fa.orbit_points[j][m])] = fb.orbit_points[j][m];
  return Perm::from_images(std::move(img));
}

std::optional<Perm> klein_pair_conjugator(const Perm& chi1, const Perm& mu1, const Perm& chi, const Perm& mu) {
  int n = chi1.degree();
  if (mu1.degree() != n || chi.degree() != n || mu.degree() != n)
    throw std::invalid_argument("klein_pair_conjugator: degree mismatch");
  if (!chi1.is_involution() || !mu1.is_involution() || !chi.is_involution() || !mu.is_involution())
    throw std::invalid_argument("klein_pair_conjugator: inputs must be involutions");
  if (!(chi1 * mu1 == mu1 * chi1) || !(chi * mu == mu * chi))
    throw std::invalid_argument("klein_pair_conjugator: pairs must commute");
  return elem_abelian2_conjugator({chi1, mu1}, {chi, mu});
}

std::vector<int> pair_orbit_mins(const Perm& sigma) {
  if (!sigma.is_involution() || !sigma.is_fixed_point_free())
    throw std::invalid_argument("pair_orbit_mins: need a fixed point free involution");
  std::vector<int> mins;
  for (int i = 0; i < sigma.degree(); ++i)
    if (i < sigma.image(i)) mins.push_back(i);
  return mins;
}

Perm induced_pair_perm(const Perm& rho, const Perm& sigma) {
  if (rho.degree() != sigma.degree()) throw std::invalid_argument("induced_pair_perm: degree mismatch");
  if (!(rho * sigma == sigma * rho)) throw std::invalid_argument("induced_pair_perm: rho must centralize sigma");
  std::vector<int> mins = pair_orbit_mins(sigma);
  std::vector<int> orbit_idx(static_cast<size_t>(sigma.degree()), -1);
  for (size_t j = 0; j < mins.size(); ++j) {
    orbit_idx[static_cast<size_t>(mins[j])] = static_cast<int>(j);
    orbit_idx[static_cast<size_t>(sigma.image(mins[j]))] = static_cast<int>(j);
  }
  std::vector<int> img(mins.size());
  for (size_t j = 0; j < mins.size(); ++j) img[j] = orbit_idx[static_cast<size_t>(rho.image(mins[j]))];
  return Perm::from_images(std::move(img));
}

}  // namespace fixglue
