#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixglue/bitvec.hpp"

namespace fixglue {

// Permutation of {0..n-1} stored as an image table. All textual I/O uses the
// 1-based cycle convention; image lists in brackets are accepted on input.
// The action on points is on the right: x^(p*q) = (x^p)^q.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  static Perm from_images(std::vector<int> images);           // 0-based
  static Perm from_cycles(int degree, std::string_view s);    // "(1,2)(3,4)"
  static std::optional<Perm> parse(int degree, std::string_view s);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool is_involution() const;  // order exactly 2
  bool is_fixed_point_free() const;

  Perm operator*(const Perm& o) const;  // apply *this first, then o
  Perm inverse() const;
  Perm conjugated_by(const Perm& t) const;  // t^-1 * (*this) * t

  // Right action on vectors: out[i] = v[sigma^{-1}(i)].
  BitVec apply(const BitVec& v) const;

  // Nontrivial cycles, each rotated to start at its smallest point, sorted by
  // that point; all 0-based.
  std::vector<std::vector<int>> cycles() const;
  // Multiset of cycle lengths including fixed points, ascending.
  std::vector<int> cycle_type() const;

  std::string to_cycle_string() const;  // 1-based; "()" for the identity

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  uint64_t hash() const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return static_cast<size_t>(p.hash()); }
};

// A permutation t with t^-1 * s * t == target, constructed by aligning cycles
// ordered by (length, smallest point); nullopt iff the cycle types differ.
std::optional<Perm> conjugator_in_sym(const Perm& s, const Perm& target);

// Simultaneous conjugator for lists of commuting involutions generating
// elementary abelian 2-groups acting freely (every nontrivial product fixed
// point free). Returns t with from[i]^t == to[i] for all i, or nullopt when no
// such t exists. Both lists must have the same length and degree.
std::optional<Perm> elem_abelian2_conjugator(const std::vector<Perm>& from, const std::vector<Perm>& to);

// Klein four-group case of the above; throws if the inputs are not commuting
// involutions of equal degree.
std::optional<Perm> klein_pair_conjugator(const Perm& chi1, const Perm& mu1, const Perm& chi, const Perm& mu);

// The permutation induced by rho on the 2-cycles of the fixed point free
// involution sigma; orbits are indexed by smallest element, ascending.
// Requires rho * sigma == sigma * rho.
Perm induced_pair_perm(const Perm& rho, const Perm& sigma);

// Smallest coordinate of each sigma-orbit, ascending (sigma an fpf involution).
std::vector<int> pair_orbit_mins(const Perm& sigma);

}  // namespace fixglue
