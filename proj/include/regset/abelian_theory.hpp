#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "regset/cayley_sum.hpp"
#include "regset/group.hpp"

namespace regset {

enum class LBranch {
    SqInsideH,        // Sq(G) ⊆ H, so L(H) = |H|
    HasOutsideSquare, // a square exists outside H, so L(H) = |NSq(G) ∩ H|
    WholeGroup        // H = G: no cosets to minimize over, reported distinctly
};

struct LValue {
    long long value = 0;
    LBranch branch = LBranch::HasOutsideSquare;
    int argmin_representative = -1;  // representative of a minimizing coset
};

// Region {(α,β) : 0 ≤ α ≤ alpha_max, 0 ≤ β ≤ beta_max} minus the origin.
struct PairRegion {
    int alpha_max = 0;
    long long beta_max = 0;
    bool excludes_origin = true;

    bool contains(int alpha, int beta) const {
        if (alpha == 0 && beta == 0 && excludes_origin) return false;
        return alpha >= 0 && alpha <= alpha_max && beta >= 0 && beta <= beta_max;
    }
    std::set<std::pair<int, int>> materialize() const;
};

struct Classification {
    std::string theorem;  // "zero-two" or "zero-three"
    int case_number = 0;  // 0 = is-regular
    std::string label;    // human-readable case description / witness
    bool is_regular() const { return case_number == 0; }
};

// Exact minimum over cosets; any group kind. H = G yields the WholeGroup
// sentinel.
LValue l_of_h_bruteforce(const Group& g, const Subgroup& h);

// Theorem closed form; abelian groups only, cross-checked against the brute
// scan in debug builds.
LValue l_of_h_abelian_closed_form(const Group& g, const Subgroup& h);

PairRegion feasible_pairs_abelian(const Group& g, const Subgroup& h);

// Deterministic witness: first α elements of NSq(G) ∩ H plus the first β
// non-squares of each non-H coset. Verified (α,β)-regular before returning.
ConnectionSet witness_abelian(const Group& g, const Subgroup& h, int alpha, int beta);

// Exact number of connection sets S making H an (α,β)-regular set:
// binom(|NSq∩H|, α) · ∏ over non-H cosets of binom(|NSq∩Hx|, β).
// Throws on overflow of 64 bits.
unsigned long long count_witnesses_abelian(const Group& g, const Subgroup& h,
                                           int alpha, int beta);

// Corollary predicate: Sq(G) ⊆ H or NSq(G) ∩ H ≠ ∅ (equivalently L(H) ≥ 1).
std::pair<bool, std::string> is_subgroup_perfect_code_abelian(const Group& g,
                                                              const Subgroup& h);

Classification classify_02(const Group& g, const Subgroup& h);
Classification classify_03(const Group& g, const Subgroup& h);

// Splits the primary decomposition of an abelian group into the C_2 factors
// (the elementary abelian direct factor E₂(G)) and the rest.
std::pair<std::vector<int>, std::vector<int>> e2_decomposition(const Group& g);

// Prime-power refinement of the factor list, sorted ascending.
std::vector<int> primary_factor_orders(const std::vector<int>& factors);

}  // namespace regset
