#include "regset/oracle.hpp"

#include <algorithm>
#include <random>

#include "regset/abelian_theory.hpp"
#include "regset/dihedral_theory.hpp"
#include "regset/group_spec.hpp"

namespace regset {

std::vector<ElementSet> candidate_space(const Group& g) {
    ElementSet nsq = non_squares(g);
    std::vector<ElementSet> out;
    for (const auto& cls : conjugacy_classes(g))
        if (cls.is_subset_of(nsq)) out.push_back(cls);
    return out;
}

OracleReport enumerate_pairs(const Group& g, const Subgroup& h,
                             const EnumerationBudget& budget) {
    if (h.order() == g.order())
        throw InputError("enumerate_pairs: H = G has no regularity partition");
    auto classes = candidate_space(g);
    const int nc = int(classes.size());
    if (nc >= 63) throw BudgetExceeded("more than 62 square-free classes");

    OracleReport report;
    report.candidate_space_size = uint64_t(1) << nc;
    report.exhaustive = budget.exhaustive;

    auto cosets = right_cosets(g, h);
    const int ncosets = int(cosets.cosets.size());
    // per-class intersection count with each coset; subset sums then replace
    // any graph construction in the enumeration loop
    std::vector<std::vector<int>> class_coset(nc, std::vector<int>(ncosets));
    for (int c = 0; c < nc; ++c)
        for (int k = 0; k < ncosets; ++k)
            class_coset[c][k] = classes[c].intersection_size(cosets.cosets[k]);

    auto consider = [&](uint64_t mask) {
        int alpha = 0;
        for (int c = 0; c < nc; ++c)
            if (mask >> c & 1) alpha += class_coset[c][0];
        int beta = -1;
        for (int k = 1; k < ncosets; ++k) {
            int cnt = 0;
            for (int c = 0; c < nc; ++c)
                if (mask >> c & 1) cnt += class_coset[c][k];
            if (beta == -1) beta = cnt;
            else if (cnt != beta) return;
        }
        auto& ev = report.pairs[{alpha, beta}];
        if (ev.witness_count++ == 0) {
            ElementSet s(g.order());
            for (int c = 0; c < nc; ++c)
                if (mask >> c & 1) s = s | classes[c];
            ev.witness = s;
        }
    };

    if (budget.exhaustive) {
        if (report.candidate_space_size > budget.max_candidate_sets)
            throw BudgetExceeded("candidate space 2^" + std::to_string(nc) +
                                 " exceeds " + std::to_string(budget.max_candidate_sets) +
                                 "; use sampled mode");
        for (uint64_t mask = 1; mask < report.candidate_space_size; ++mask)
            consider(mask);
    } else {
        std::mt19937_64 rng(budget.seed);
        std::uniform_int_distribution<uint64_t> d(1, report.candidate_space_size - 1);
        for (uint64_t i = 0; i < budget.sample_count; ++i) consider(d(rng));
    }
    return report;
}

std::vector<std::vector<int>> abelian_factorizations(int max_order) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // non-decreasing factor lists, product in [2, max_order]
    auto rec = [&](auto&& self, int min_factor, int product) -> void {
        if (product >= 2) out.push_back(cur);
        for (int f = min_factor; product * f <= max_order; ++f) {
            cur.push_back(f);
            self(self, f, product * f);
            cur.pop_back();
        }
    };
    rec(rec, 2, 1);
    return out;
}

namespace {

std::vector<std::pair<int, int>> set_difference(const std::set<std::pair<int, int>>& a,
                                                const std::set<std::pair<int, int>>& b) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : a)
        if (!b.count(p)) out.push_back(p);
    return out;
}

}  // namespace

std::vector<SweepResult> verify_abelian_sweep(int max_order,
                                              const EnumerationBudget& budget) {
    std::vector<SweepResult> results;
    for (const auto& factors : abelian_factorizations(max_order)) {
        Group g = Group::abelian(factors);
        for (const Subgroup& h : all_subgroups(g)) {
            if (h.order() == g.order()) continue;
            SweepResult r;
            r.instance = group_spec_string(g) + " H=[";
            auto elems = h.elements.to_vector();
            for (size_t i = 0; i < elems.size(); ++i)
                r.instance += (i ? "," : "") + std::to_string(elems[i]);
            r.instance += "]";
            auto theory = feasible_pairs_abelian(g, h).materialize();
            try {
                auto oracle = enumerate_pairs(g, h, budget).pair_set();
                r.only_theory = set_difference(theory, oracle);
                r.only_oracle = set_difference(oracle, theory);
                r.agree = r.only_theory.empty() && r.only_oracle.empty();
            } catch (const BudgetExceeded&) {
                r.skipped = true;
                r.agree = true;
            }
            results.push_back(std::move(r));
        }
    }
    return results;
}

std::vector<SweepResult> verify_dihedral_sweep(int n_min, int n_max,
                                               const EnumerationBudget& budget) {
    std::vector<SweepResult> results;
    for (int n = std::max(3, n_min); n <= n_max; ++n) {
        Group g = Group::dihedral(n);
        for (const auto& fam : dihedral_subgroup_families(n)) {
            SweepResult r;
            r.instance = "dihedral:" + std::to_string(n) + " " + fam.describe();
            auto theory = feasible_pairs_dihedral(n, fam).pairs;
            try {
                auto oracle = enumerate_pairs(g, fam.resolve(g), budget).pair_set();
                r.only_theory = set_difference(theory, oracle);
                r.only_oracle = set_difference(oracle, theory);
                r.agree = r.only_theory.empty() && r.only_oracle.empty();
            } catch (const BudgetExceeded&) {
                r.skipped = true;
                r.agree = true;
            }
            results.push_back(std::move(r));
        }
    }
    return results;
}

}  // namespace regset
