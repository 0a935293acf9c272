#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fixglue/linear_code.hpp"
#include "fixglue/permgroup.hpp"

namespace fixglue {

// Disjoint coordinate pairs (0-based). When supplied, every permutation the
// search produces maps the pairing onto itself, which is exactly commuting
// with the involution the pairing defines.
using Matching = std::vector<std::pair<int, int>>;

struct CanonicalForm {
  LinearCode code;   // representative: equal on a full S_n-equivalence class
  Perm transform;    // input.image(transform) == code
  std::vector<uint64_t> trace;  // refinement invariant, part of the internal key
  Matching matching; // canonical image of the input matching (sorted), if any

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.code == b.code && a.matching == b.matching;
  }
};

enum class AutAlgorithm { kAuto, kRefinement, kBruteForce };

// Full automorphism group {sigma : C^sigma = C}. kAuto dispatches to the
// brute-force search for n <= 8 and to partition refinement above; the
// refinement path collects minimum-weight codeword incidence invariants and
// escalates to further weight classes when cells stay coarse.
PermGroup automorphism_group(const LinearCode& c, AutAlgorithm alg = AutAlgorithm::kAuto,
                             uint64_t enumeration_bound = kDefaultEnumerationBound);

// Exhaustive n! search, the oracle for small lengths (n <= 10).
PermGroup aut_brute_force(const LinearCode& c);

// Witness sigma with a.image(sigma) == b, or nullopt. Weight enumerator
// mismatches return nullopt without search.
std::optional<Perm> code_equivalence(const LinearCode& a, const LinearCode& b);

CanonicalForm canonical_form(const LinearCode& c);

// Same, but gives up (nullopt) once the search has visited node_budget nodes;
// callers fall back to pairwise equivalence tests.
std::optional<CanonicalForm> canonical_form_budgeted(const LinearCode& c, uint64_t node_budget);

// Matching-respecting variants.
PermGroup structure_automorphisms(const LinearCode& c, const Matching& m);
std::optional<Perm> structure_iso(const LinearCode& a, const Matching& ma, const LinearCode& b, const Matching& mb);
CanonicalForm structure_canonical_form(const LinearCode& c, const Matching& m);

}  // namespace fixglue
