#include "regset/abelian_theory.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace regset {

namespace {

void require_abelian(const Group& g, const char* where) {
    if (g.kind() != GroupKind::Abelian)
        throw InputError(std::string(where) + ": abelian group required");
}

void require_proper(const Group& g, const Subgroup& h, const char* where) {
    if (h.order() == g.order())
        throw InputError(std::string(where) + ": H = G is excluded");
}

unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned long long next = r * (n - k + i);
        if (next / (n - k + i) != r)
            throw std::overflow_error("binomial overflow");
        r = next / i;
    }
    return r;
}

// Primary (prime-power) coordinates of every element, via CRT on each factor.
struct PrimaryView {
    std::vector<int> orders;                 // prime powers, one per position
    std::vector<std::vector<int>> coords;    // [element][position]
};

PrimaryView primary_view(const Group& g) {
    PrimaryView v;
    std::vector<std::vector<int>> per_factor_orders;
    for (int m : g.factor_orders()) {
        auto parts = primary_factor_orders({m});
        per_factor_orders.push_back(parts);
        for (int q : parts) v.orders.push_back(q);
    }
    v.coords.resize(g.order());
    for (int x = 0; x < g.order(); ++x) {
        auto c = g.coordinates(x);
        for (size_t f = 0; f < c.size(); ++f)
            for (int q : per_factor_orders[f])
                v.coords[x].push_back(c[f] % q);
    }
    return v;
}

int coordinate_order(int c, int q) {
    int o = 1, v = c % q;
    while (v != 0) {
        v = (v + c) % q;
        ++o;
    }
    return o;
}

bool is_elementary_abelian_2(const Group& g) {
    for (int x = 1; x < g.order(); ++x)
        if (g.multiply(x, x) != 0) return false;
    return g.order() > 1;
}

}  // namespace

std::vector<int> primary_factor_orders(const std::vector<int>& factors) {
    std::vector<int> out;
    for (int m : factors) {
        int rest = m;
        for (int p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            int q = 1;
            while (rest % p == 0) { q *= p; rest /= p; }
            out.push_back(q);
        }
        if (rest > 1) out.push_back(rest);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::pair<int, int>> PairRegion::materialize() const {
    std::set<std::pair<int, int>> s;
    for (int a = 0; a <= alpha_max; ++a)
        for (long long b = 0; b <= beta_max; ++b)
            if (!(a == 0 && b == 0 && excludes_origin)) s.insert({a, int(b)});
    return s;
}

LValue l_of_h_bruteforce(const Group& g, const Subgroup& h) {
    LValue out;
    if (h.order() == g.order()) {
        out.branch = LBranch::WholeGroup;
        out.value = std::numeric_limits<long long>::max();
        return out;
    }
    ElementSet nsq = non_squares(g);
    auto cosets = right_cosets(g, h);
    long long best = std::numeric_limits<long long>::max();
    for (size_t i = 1; i < cosets.cosets.size(); ++i) {
        int cnt = nsq.intersection_size(cosets.cosets[i]);
        if (cnt < best) {
            best = cnt;
            out.argmin_representative = cosets.representatives[i];
        }
    }
    out.value = best;
    ElementSet sq = squares(g);
    out.branch = sq.is_subset_of(h.elements) ? LBranch::SqInsideH
                                             : LBranch::HasOutsideSquare;
    return out;
}

LValue l_of_h_abelian_closed_form(const Group& g, const Subgroup& h) {
    require_abelian(g, "l_of_h_abelian_closed_form");
    LValue out;
    if (h.order() == g.order()) {
        out.branch = LBranch::WholeGroup;
        out.value = std::numeric_limits<long long>::max();
        return out;
    }
    ElementSet sq = squares(g);
    if (sq.is_subset_of(h.elements)) {
        out.branch = LBranch::SqInsideH;
        out.value = h.order();
        for (int x = 0; x < g.order(); ++x)
            if (!h.elements.test(x)) { out.argmin_representative = x; break; }
    } else {
        out.branch = LBranch::HasOutsideSquare;
        out.value = (non_squares(g) & h.elements).size();
        for (int x = 0; x < g.order(); ++x)
            if (sq.test(x) && !h.elements.test(x)) { out.argmin_representative = x; break; }
    }
    assert(out.value == l_of_h_bruteforce(g, h).value);
    return out;
}

PairRegion feasible_pairs_abelian(const Group& g, const Subgroup& h) {
    require_abelian(g, "feasible_pairs_abelian");
    require_proper(g, h, "feasible_pairs_abelian");
    PairRegion r;
    r.alpha_max = (non_squares(g) & h.elements).size();
    r.beta_max = l_of_h_abelian_closed_form(g, h).value;
    r.excludes_origin = true;
    return r;
}

ConnectionSet witness_abelian(const Group& g, const Subgroup& h, int alpha, int beta) {
    require_abelian(g, "witness_abelian");
    require_proper(g, h, "witness_abelian");
    PairRegion region = feasible_pairs_abelian(g, h);
    if (!region.contains(alpha, beta))
        throw InfeasiblePair("(" + std::to_string(alpha) + "," + std::to_string(beta) +
                             ") outside region alpha<=" + std::to_string(region.alpha_max) +
                             ", beta<=" + std::to_string(region.beta_max));
    ElementSet nsq = non_squares(g);
    ElementSet s(g.order());
    auto inside = (nsq & h.elements).to_vector();
    for (int i = 0; i < alpha; ++i) s.add(inside[i]);
    auto cosets = right_cosets(g, h);
    for (size_t i = 1; i < cosets.cosets.size(); ++i) {
        auto choices = (nsq & cosets.cosets[i]).to_vector();
        for (int j = 0; j < beta; ++j) s.add(choices[j]);
    }
    ConnectionSet c = make_connection_set(g, s);
    RegularityResult r = check_regular_set(build_graph(c), h.elements);
    if (!r.regular || r.alpha != alpha || r.beta != beta)
        throw VerificationFailure("witness_abelian produced a non-(alpha,beta)-regular set");
    return c;
}

unsigned long long count_witnesses_abelian(const Group& g, const Subgroup& h,
                                           int alpha, int beta) {
    require_abelian(g, "count_witnesses_abelian");
    require_proper(g, h, "count_witnesses_abelian");
    PairRegion region = feasible_pairs_abelian(g, h);
    if (!region.contains(alpha, beta))
        throw InfeasiblePair("count requested for infeasible pair");
    ElementSet nsq = non_squares(g);
    unsigned long long total = binom((nsq & h.elements).size(), alpha);
    auto cosets = right_cosets(g, h);
    for (size_t i = 1; i < cosets.cosets.size(); ++i) {
        unsigned long long f = binom(nsq.intersection_size(cosets.cosets[i]), beta);
        if (f != 0 && total > std::numeric_limits<unsigned long long>::max() / f)
            throw std::overflow_error("witness count overflow");
        total *= f;
    }
    return total;
}

std::pair<bool, std::string> is_subgroup_perfect_code_abelian(const Group& g,
                                                              const Subgroup& h) {
    require_abelian(g, "is_subgroup_perfect_code_abelian");
    if (h.order() == g.order())
        return {true, "H = G is a perfect code of the empty Cayley sum graph"};
    ElementSet sq = squares(g);
    if (sq.is_subset_of(h.elements)) return {true, "Sq(G) ⊆ H"};
    if (non_squares(g).intersects(h.elements)) return {true, "NSq(G) ∩ H ≠ ∅"};
    return {false, "Sq(G) ⊄ H and NSq(G) ∩ H = ∅"};
}

std::pair<std::vector<int>, std::vector<int>> e2_decomposition(const Group& g) {
    require_abelian(g, "e2_decomposition");
    auto primary = primary_factor_orders(g.factor_orders());
    std::vector<int> e2, rest;
    for (int q : primary) (q == 2 ? e2 : rest).push_back(q);
    return {e2, rest};
}

namespace {

// Shared by classify_02 / classify_03: cases for L(H) in {0, 1}.
Classification low_l_cases(const Group& g, const Subgroup& h, const LValue& l,
                           const std::string& theorem) {
    Classification c;
    c.theorem = theorem;
    if (l.value == 0) {
        ElementSet sq = squares(g);
        if (!h.elements.is_subset_of(sq) || h.elements == sq)
            throw VerificationFailure("L=0 but H is not a proper subset of Sq(G)");
        c.case_number = 1;
        c.label = "H ⊊ Sq(G)";
        return c;
    }
    // L = 1
    if (l.branch == LBranch::SqInsideH) {
        if (h.order() != 1 || !is_elementary_abelian_2(g))
            throw VerificationFailure("L=1 Sq⊆H but H non-trivial or G not elementary abelian");
        c.case_number = 2;
        c.label = "H trivial, G elementary abelian 2-group";
        return c;
    }
    // |NSq(G) ∩ H| = 1: H = <x> ≅ C2 and G = H × K with K owning a square
    auto nsq_in_h = (non_squares(g) & h.elements).to_vector();
    int x = nsq_in_h.at(0);
    if (g.element_order(x) != 2 || h.order() != 2)
        throw VerificationFailure("expected H ≅ C2 generated by a non-square involution");
    PrimaryView v = primary_view(g);
    int pos = -1;
    for (size_t p = 0; p < v.orders.size(); ++p)
        if (v.orders[p] == 2 && v.coords[x][p] == 1) { pos = int(p); break; }
    if (pos == -1)
        throw VerificationFailure("non-square involution has no C2 primary component");
    ElementSet k(g.order());
    for (int y = 0; y < g.order(); ++y)
        if (v.coords[y][pos] == 0) k.add(y);
    if (k.size() * 2 != g.order() || k.test(x))
        throw VerificationFailure("complement K does not split G as H × K");
    bool k_has_square = false;
    k.for_each([&](int y) {
        int y2 = g.multiply(y, y);
        if (y2 != 0) k_has_square = true;
    });
    if (!k_has_square)
        throw VerificationFailure("complement K has no non-trivial square element");
    c.case_number = 3;
    c.label = "G ≅ H × K with H ≅ C2 = <" + g.element_name(x) +
              "> and K (order " + std::to_string(k.size()) + ") having a non-trivial square";
    return c;
}

}  // namespace

Classification classify_02(const Group& g, const Subgroup& h) {
    require_abelian(g, "classify_02");
    require_proper(g, h, "classify_02");
    LValue l = l_of_h_abelian_closed_form(g, h);
    if (l.value >= 2) return {"zero-two", 0, "is-regular"};
    return low_l_cases(g, h, l, "zero-two");
}

Classification classify_03(const Group& g, const Subgroup& h) {
    require_abelian(g, "classify_03");
    require_proper(g, h, "classify_03");
    LValue l = l_of_h_abelian_closed_form(g, h);
    if (l.value >= 3) return {"zero-three", 0, "is-regular"};
    if (l.value <= 1) {
        Classification c = low_l_cases(g, h, l, "zero-three");
        // the (0,3) theorem folds "trivial H in elementary abelian" into |H| <= 2
        if (c.case_number == 2) c.label = "G elementary abelian 2-group, |H| ≤ 2";
        return c;
    }
    // L = 2
    Classification c;
    c.theorem = "zero-three";
    if (l.branch == LBranch::SqInsideH) {
        // L = |H| = 2
        ElementSet sq = squares(g);
        if (sq.size() == 1) {
            if (!is_elementary_abelian_2(g))
                throw VerificationFailure("|Sq|=1 but G not elementary abelian");
            c.case_number = 2;
            c.label = "G elementary abelian 2-group, |H| ≤ 2";
            return c;
        }
        if (sq.size() != 2 || !(h.elements == sq))
            throw VerificationFailure("L=|H|=2 but Sq(G) is not H of size 2");
        auto [e2, rest] = e2_decomposition(g);
        if (rest != std::vector<int>{4})
            throw VerificationFailure("expected G ≅ E2(G) × C4");
        c.case_number = 4;
        c.label = "G ≅ E2(G) × C4 (E2 rank " + std::to_string(e2.size()) +
                  "), H the order-2 subgroup of the C4 factor";
        return c;
    }
    // L = |NSq(G) ∩ H| = 2
    auto nsq_in_h = (non_squares(g) & h.elements).to_vector();
    int x = nsq_in_h.at(0), y = nsq_in_h.at(1);
    if (g.element_order(x) == 2) {
        if (g.element_order(y) != 2 || h.order() != 4)
            throw VerificationFailure("expected H ≅ C2 × C2");
        PrimaryView v = primary_view(g);
        bool m_nontrivial = false;
        for (size_t p = 0; p < v.orders.size(); ++p) {
            bool is_e2 = v.orders[p] == 2;
            if (is_e2) {
                if (v.coords[x][p] != v.coords[y][p])
                    throw VerificationFailure("x and y differ in their E2(G) component");
                if (v.coords[x][p] != 0) m_nontrivial = true;
            } else {
                if (coordinate_order(v.coords[x][p], v.orders[p]) > 2 ||
                    coordinate_order(v.coords[y][p], v.orders[p]) > 2)
                    throw VerificationFailure("K-components of x, y must have order ≤ 2");
            }
        }
        if (!m_nontrivial)
            throw VerificationFailure("shared E2(G) component of x, y is trivial");
        c.case_number = 5;
        c.label = "H = <" + g.element_name(x) + ", " + g.element_name(y) +
                  "> with x = (m,k1), y = (m,k2), m ≠ e in E2(G), o(k_i) ≤ 2";
        return c;
    }
    // both non-squares of order 4: H = <x> ≅ C4
    if (g.element_order(x) != 4 || h.order() != 4 ||
        !(generate_subgroup(g, {x}).elements == h.elements))
        throw VerificationFailure("expected H cyclic of order 4 generated by a non-square");
    c.case_number = 6;
    c.label = "H = <" + g.element_name(x) + ">, a non-square element of order 4";
    return c;
}

}  // namespace regset
