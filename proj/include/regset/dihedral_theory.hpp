#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "regset/cayley_sum.hpp"
#include "regset/group.hpp"

namespace regset {

// Subgroup of D_{2n} in family form: Cyclic(t) = <a^t> with index 2t, or
// Mixed(t,s) = <a^t, a^s b> with index t. Reflections <a^s b> are Mixed with
// t = n.
struct DihedralSubgroup {
    enum class Family { Cyclic, Mixed };
    Family family = Family::Cyclic;
    int n = 0;
    int t = 1;
    int s = 0;  // Mixed only

    Subgroup resolve(const Group& g) const;
    std::string describe() const;
};

std::vector<DihedralSubgroup> dihedral_subgroup_families(int n);

struct FeasiblePairSet {
    std::set<std::pair<int, int>> pairs;
    std::string clause;  // which theorem part produced the set
};

struct WitnessRecipe {
    std::vector<std::string> ingredients;
    ElementSet resolved;
};

// Dispatches over the closed-form characterizations of both subgroup
// families; the empty set is a legal
// answer (e.g. Cyclic(t) with even t > 2). H = G (Mixed t=1) yields the
// empty set with an explanatory clause.
FeasiblePairSet feasible_pairs_dihedral(int n, const DihedralSubgroup& h);

// Builds the proof construction for a feasible pair and verifies the
// resolved set is exactly (alpha,beta)-regular before returning.
WitnessRecipe witness_dihedral(const Group& g, const DihedralSubgroup& h,
                               int alpha, int beta);

// Omega_beta = union of the first beta transversal blocks
// S_i = {a^j, a^-j : it+1 <= j <= (i+1)t-1, j odd}; requires n even, t odd.
ElementSet omega_blocks(const Group& g, int t, int beta);
// One block S_i.
ElementSet omega_block(const Group& g, int t, int i);

// Normal square-free subset of <a^t> of size alpha: {a^m} (m odd, alpha odd)
// plus pair classes {a^{kt}, a^{-kt}} with k odd; requires n even, t odd.
ElementSet s_alpha_inside(const Group& g, int t, int alpha);

// A_i = {a^{it}b, ..., a^{(i+1)t-1}b}, 2m/t blocks partitioning the
// reflections of D_{2n}, n = 2m.
std::vector<ElementSet> blocks_a_i(const Group& g, int t);

}  // namespace regset
