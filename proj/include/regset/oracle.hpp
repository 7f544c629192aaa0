#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "regset/group.hpp"

namespace regset {

struct EnumerationBudget {
    uint64_t max_candidate_sets = uint64_t(1) << 20;
    bool exhaustive = true;
    uint64_t sample_count = 0;  // sampled mode only
    uint64_t seed = 0;
};

struct PairEvidence {
    uint64_t witness_count = 0;
    ElementSet witness;  // first witness in enumeration order
};

struct OracleReport {
    std::map<std::pair<int, int>, PairEvidence> pairs;
    bool exhaustive = true;
    uint64_t candidate_space_size = 0;  // 2^(#square-free classes)

    std::set<std::pair<int, int>> pair_set() const {
        std::set<std::pair<int, int>> s;
        for (const auto& [p, e] : pairs) s.insert(p);
        return s;
    }
};

// The square-free conjugacy classes of G. Every valid connection set is a
// union of these and every such union is valid (squares are
// conjugation-closed).
std::vector<ElementSet> candidate_space(const Group& g);

// Enumerates every non-empty union of square-free classes (or a uniform
// sample in sampled mode) and records which (alpha,beta) each realizes for
// H, via per-coset intersection counting.
OracleReport enumerate_pairs(const Group& g, const Subgroup& h,
                             const EnumerationBudget& budget = {});

struct SweepResult {
    std::string instance;
    bool agree = true;
    std::vector<std::pair<int, int>> only_theory;
    std::vector<std::pair<int, int>> only_oracle;
    bool skipped = false;  // candidate space over budget
};

// Theory-vs-oracle comparison over every subgroup of every abelian group
// of order <= max_order (all factor lists).
std::vector<SweepResult> verify_abelian_sweep(int max_order,
                                              const EnumerationBudget& budget = {});

// Theory-vs-oracle comparison over every proper subgroup family of D_{2n},
// n in [n_min, n_max].
std::vector<SweepResult> verify_dihedral_sweep(int n_min, int n_max,
                                               const EnumerationBudget& budget = {});

// All factor lists (non-decreasing, factors >= 2) with product in [2, max].
std::vector<std::vector<int>> abelian_factorizations(int max_order);

}  // namespace regset
