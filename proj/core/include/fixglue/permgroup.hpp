#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixglue/perm.hpp"

namespace fixglue {

inline constexpr uint64_t kDefaultElementsBound = 1000000;

// Finite permutation group with a base-and-strong-generators chain, built on
// demand. Chain construction is a one-time internal mutation: finish it (any
// query builds it) before sharing a group across threads.
class PermGroup {
 public:
  struct Level {
    int base = -1;
    std::vector<int> orbit;        // BFS order, orbit[0] == base
    std::vector<int> orbit_pos;    // point -> index into orbit, or -1
    std::vector<Perm> transversal; // transversal[i]: base^t == orbit[i]
    std::vector<Perm> gens;        // generators first assigned at this level
  };

  PermGroup() = default;

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup generated(int degree, std::vector<Perm> gens);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_natural_symmetric() const { return natural_symmetric_; }

  // Prescribes the order in which new base points are preferred; must be set
  // before the first chain query.
  void set_base_hint(std::vector<int> hint);

  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& g) const;

  bool has_u64_order() const;
  uint64_t order() const;             // throws std::overflow_error when too big
  std::string order_string() const;   // exact decimal
  std::vector<uint64_t> basic_orbit_lengths() const;

  std::vector<Perm> elements(uint64_t bound = kDefaultElementsBound) const;

  // One representative per right coset H\G; throws if h is not a subgroup or
  // the index exceeds max_index.
  std::vector<Perm> right_transversal(const PermGroup& h, uint64_t max_index = 100000) const;

  // One representative per conjugacy class of involutions (optionally only
  // fixed point free ones); requires |G| <= bound.
  std::vector<Perm> involution_class_reps(bool fpf_only, uint64_t bound = kDefaultElementsBound) const;

  // {g in G : gh == hg for all generators h of H}.
  static PermGroup centralizer(const PermGroup& g, const PermGroup& h);

  const std::vector<Level>& chain() const;

  // Generators of the pointwise stabilizer of the given prefix of the chain
  // base; empty prefix gives the whole group's strong generators. Returns
  // nullopt when the chain base does not start with those points.
  std::optional<std::vector<Perm>> stabilizer_generators(const std::vector<int>& prefix) const;

 private:
  void build_chain() const;
  std::pair<Perm, size_t> sift_from(size_t level, Perm g) const;
  int pick_base(const Perm& g, const std::vector<int>& used) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  bool natural_symmetric_ = false;
  std::vector<int> base_hint_;

  mutable bool chain_built_ = false;
  mutable std::vector<Level> chain_;
};

// Centralizer of a free elementary abelian 2-group action in the full
// symmetric group, built structurally (per-orbit translations plus
// equivariant orbit swaps). Returns nullopt when the generators do not form
// such an action.
std::optional<PermGroup> sym_centralizer_free_abelian2(int degree, const std::vector<Perm>& gens);

}  // namespace fixglue
