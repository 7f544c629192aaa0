#include "regset/dihedral_theory.hpp"

namespace regset {

namespace {

void require_dihedral(const Group& g, const char* where) {
    if (g.kind() != GroupKind::Dihedral)
        throw InputError(std::string(where) + ": dihedral group required");
}

// Reflection class of rotation-exponent parity p: b^G for p=0, (ab)^G for
// p=1 when n is even; all reflections when n is odd.
ElementSet reflection_class(const Group& g, int parity) {
    const int n = g.dihedral_n();
    ElementSet s(g.order());
    for (int j = 0; j < n; ++j)
        if (n % 2 == 1 || j % 2 == ((parity % 2) + 2) % 2) s.add(g.reflection(j));
    return s;
}

ElementSet pair_class(const Group& g, int j) {
    ElementSet s(g.order());
    s.add(g.rotation(j));
    s.add(g.rotation(-j));
    return s;
}

std::string refl_name(int parity) { return parity % 2 == 0 ? "b^G" : "(ab)^G"; }

}  // namespace

Subgroup DihedralSubgroup::resolve(const Group& g) const {
    require_dihedral(g, "DihedralSubgroup::resolve");
    if (g.dihedral_n() != n) throw InputError("subgroup family n mismatch");
    Subgroup sub;
    if (family == Family::Cyclic)
        sub = generate_subgroup(g, {g.rotation(t)});
    else if (t == n)
        sub = generate_subgroup(g, {g.reflection(s)});
    else
        sub = generate_subgroup(g, {g.rotation(t), g.reflection(s)});
    sub.tag = describe();
    return sub;
}

std::string DihedralSubgroup::describe() const {
    if (family == Family::Cyclic) return "cyclic(t=" + std::to_string(t) + ")";
    return "mixed(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")";
}

std::vector<DihedralSubgroup> dihedral_subgroup_families(int n) {
    if (n < 3) throw InputError("dihedral n must be >= 3");
    std::vector<DihedralSubgroup> out;
    for (int t = 1; t <= n; ++t) {
        if (n % t != 0) continue;
        out.push_back({DihedralSubgroup::Family::Cyclic, n, t, 0});
        if (t == 1) continue;  // mixed(t=1) is G itself
        for (int s = 0; s < t; ++s)
            out.push_back({DihedralSubgroup::Family::Mixed, n, t, s});
    }
    return out;
}

ElementSet omega_block(const Group& g, int t, int i) {
    require_dihedral(g, "omega_block");
    const int n = g.dihedral_n();
    if (n % 2 != 0) throw InputError("omega_block: n must be even");
    if (t % 2 == 0 || n % t != 0) throw InputError("omega_block: t must be an odd divisor of n");
    const int m = n / 2;
    if (i < 0 || i >= m / t) throw InputError("omega_block: block index out of range");
    ElementSet s(g.order());
    for (int j = i * t + 1; j <= (i + 1) * t - 1; ++j)
        if (j % 2 == 1) {
            s.add(g.rotation(j));
            s.add(g.rotation(-j));
        }
    return s;
}

ElementSet omega_blocks(const Group& g, int t, int beta) {
    require_dihedral(g, "omega_blocks");
    const int n = g.dihedral_n();
    if (n % 2 != 0) throw InputError("omega_blocks: n must be even");
    if (t % 2 == 0 || n % t != 0)
        throw InputError("omega_blocks: t must be an odd divisor of n");
    if (beta < 0 || beta > (n / 2) / t)
        throw InputError("omega_blocks: beta out of range [0, m/t]");
    ElementSet s(g.order());
    for (int i = 0; i < beta; ++i) s = s | omega_block(g, t, i);
    return s;
}

ElementSet s_alpha_inside(const Group& g, int t, int alpha) {
    require_dihedral(g, "s_alpha_inside");
    const int n = g.dihedral_n();
    if (n % 2 != 0) throw InputError("s_alpha_inside: n must be even");
    if (t % 2 == 0 || n % t != 0)
        throw InputError("s_alpha_inside: t must be an odd divisor of n");
    const int m = n / 2;
    if (alpha < 0 || alpha > m / t) throw InputError("s_alpha_inside: alpha out of range");
    if (m % 2 == 0 && alpha % 2 == 1)
        throw InputError("s_alpha_inside: alpha must be even when m is even");
    ElementSet s(g.order());
    int remaining = alpha;
    if (alpha % 2 == 1) {
        s.add(g.rotation(m));  // {a^m}, a singleton class when m is odd
        --remaining;
    }
    for (int k = 1; remaining > 0; k += 2) {
        if (k * t >= m) throw InputError("s_alpha_inside: ran out of pair classes");
        s = s | pair_class(g, k * t);
        remaining -= 2;
    }
    return s;
}

std::vector<ElementSet> blocks_a_i(const Group& g, int t) {
    require_dihedral(g, "blocks_a_i");
    const int n = g.dihedral_n();
    if (n % 2 != 0 || n % t != 0)
        throw InputError("blocks_a_i: requires n = 2m with t | n");
    std::vector<ElementSet> blocks;
    for (int i = 0; i < n / t; ++i) {
        ElementSet b(g.order());
        for (int j = i * t; j < (i + 1) * t; ++j) b.add(g.reflection(j));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

FeasiblePairSet feasible_pairs_dihedral(int n, const DihedralSubgroup& h) {
    if (h.n != n) throw InputError("subgroup family n mismatch");
    FeasiblePairSet out;
    auto box = [&](int amin, int amax, int astep, std::vector<int> betas) {
        for (int a = amin; a <= amax; a += astep)
            for (int b : betas)
                if (a || b) out.pairs.insert({a, b});
    };
    auto range = [](int lo, int hi, int step = 1) {
        std::vector<int> v;
        for (int x = lo; x <= hi; x += step) v.push_back(x);
        return v;
    };

    if (h.family == DihedralSubgroup::Family::Mixed) {
        if (h.t == 1) {
            out.clause = "H = G: only the excluded (0,0)";
            return out;
        }
        if (h.t == n) {
            out.pairs.insert({1, 1});
            out.clause = "reflection theorem: <a^s b> iff (1,1)";
            return out;
        }
        const int sz = 2 * n / h.t;  // |H|
        if (n % 2 == 1) {
            out.pairs.insert({sz / 2, sz / 2});
            out.clause = "mixed, n odd: iff (|H|/2, |H|/2)";
            return out;
        }
        const int m = n / 2;
        if (h.t == 2) {
            if (m % 2 == 1) {
                box(0, sz / 2, sz / 2, range(0, sz));
                out.clause = "Thm 3.5 part 1: t=2, m odd";
            } else {
                box(0, sz / 2, sz / 2, range(0, sz, 2));
                out.clause = "Thm 3.5 part 2: t=2, m even";
            }
            return out;
        }
        if (h.t % 2 == 0) {
            out.pairs.insert({sz / 2, sz / 2});
            out.clause = "Thm 3.5 part 3: t>2 even";
            return out;
        }
        const int mt = m / h.t;
        if (m % 2 == 1) {
            for (int j = 0; j <= 2; ++j)
                for (int eta = 0; eta <= mt; ++eta)
                    for (int zeta = 0; zeta <= mt; ++zeta)
                        if (eta + j * mt || zeta + j * mt)
                            out.pairs.insert({eta + j * mt, zeta + j * mt});
            out.clause = "Thm 3.5 part 4: t odd, m odd";
        } else {
            for (int j = 0; j <= 2; ++j)
                for (int eta = 0; eta <= m / (2 * h.t); ++eta)
                    for (int zeta = 0; zeta <= mt; ++zeta)
                        if (2 * eta + j * mt || zeta + j * mt)
                            out.pairs.insert({2 * eta + j * mt, zeta + j * mt});
            out.clause = "Thm 3.5 part 5: t odd, m even";
        }
        return out;
    }

    // Cyclic family <a^t>, |H| = n/t
    const int sz = n / h.t;
    if (n % 2 == 1) {
        if (h.t == 1) {
            out.pairs.insert({0, sz});
            out.clause = "cyclic, n odd: iff t=1 and (0,|H|)";
        } else {
            out.clause = "cyclic, n odd, t>1: no regular pairs";
        }
        return out;
    }
    const int m = n / 2;
    if (h.t == 2) {
        out.pairs.insert({0, sz});
        out.clause = "cyclic n even, part 1: t=2, (0,|H|)";
        return out;
    }
    if (h.t % 2 == 0) {
        out.clause = "cyclic n even, t>2 even: no regular pairs";
        return out;
    }
    const int astep = m % 2 == 0 ? 2 : 1;
    if (h.t == 1) {
        box(0, sz / 2, astep, {0, sz / 2, sz});
        out.clause = m % 2 == 1 ? "cyclic n even, part 2: t=1, m odd"
                                : "cyclic n even, part 3: t=1, m even";
    } else {
        box(0, sz / 2, astep, {0, sz / 2});
        out.clause = m % 2 == 1 ? "cyclic n even, part 4: t>1 odd, m odd"
                                : "cyclic n even, part 5: t odd, m even";
    }
    return out;
}

WitnessRecipe witness_dihedral(const Group& g, const DihedralSubgroup& h,
                               int alpha, int beta) {
    require_dihedral(g, "witness_dihedral");
    const int n = g.dihedral_n();
    FeasiblePairSet feasible = feasible_pairs_dihedral(n, h);
    if (!feasible.pairs.count({alpha, beta}))
        throw InfeasiblePair("(" + std::to_string(alpha) + "," + std::to_string(beta) +
                             ") not feasible for " + h.describe() + " in D_" +
                             std::to_string(2 * n));

    WitnessRecipe recipe;
    ElementSet s(g.order());
    auto use = [&](const ElementSet& part, const std::string& name) {
        s = s | part;
        recipe.ingredients.push_back(name);
    };

    const int m = n / 2;  // meaningful only when n is even
    if (h.family == DihedralSubgroup::Family::Mixed) {
        if (h.t == n || n % 2 == 1) {
            // reflections <a^s b> need both classes; mixed n-odd needs b^G,
            // which for odd n is already every reflection
            use(reflection_class(g, 0), "b^G");
            if (n % 2 == 0) use(reflection_class(g, 1), "(ab)^G");
        } else if (h.t == 2) {
            if (alpha == m) use(reflection_class(g, h.s), refl_name(h.s));
            // outside part of size beta from {a^m}, pair classes, (a^{s+1})^G
            int remaining = beta;
            if (remaining > m) {
                use(reflection_class(g, h.s + 1), refl_name(h.s + 1));
                remaining -= m;
            }
            if (remaining % 2 == 1) {
                use(ElementSet::of(g.order(), {g.rotation(m)}), "{a^m}");
                --remaining;
            }
            for (int j = 1; remaining > 0; j += 2) {
                if (j == m) continue;
                use(pair_class(g, j), "{a^" + std::to_string(j) + ",a^-" + std::to_string(j) + "}");
                remaining -= 2;
            }
        } else if (h.t % 2 == 0) {
            use(reflection_class(g, 0), "b^G");
            use(reflection_class(g, 1), "(ab)^G");
        } else {
            // t odd: alpha = eta + j*m/t, beta = zeta + j*m/t with j
            // reflection classes included
            const int mt = m / h.t;
            int j = -1, eta = 0, zeta = 0;
            for (int cand = 0; cand <= 2; ++cand) {
                eta = alpha - cand * mt;
                zeta = beta - cand * mt;
                if (eta >= 0 && eta <= mt && zeta >= 0 && zeta <= mt &&
                    (m % 2 == 1 || eta % 2 == 0)) {
                    j = cand;
                    break;
                }
            }
            if (j == -1)
                throw VerificationFailure("no reflection-class count fits " +
                                          std::to_string(alpha) + "," + std::to_string(beta));
            if (eta > 0) use(s_alpha_inside(g, h.t, eta), "S_" + std::to_string(eta));
            if (zeta > 0) use(omega_blocks(g, h.t, zeta), "Omega_" + std::to_string(zeta));
            if (j >= 1) use(reflection_class(g, 0), "b^G");
            if (j == 2) use(reflection_class(g, 1), "(ab)^G");
        }
    } else {
        // Cyclic <a^t>
        if (n % 2 == 1) {
            use(reflection_class(g, 0), "b^G");
        } else if (h.t == 2) {
            ElementSet odd_rot(g.order());
            for (int k = 1; k < n; k += 2) odd_rot.add(g.rotation(k));
            use(odd_rot, "odd rotations");
            use(reflection_class(g, 0), "b^G");
            use(reflection_class(g, 1), "(ab)^G");
        } else if (h.t == 1) {
            if (alpha > 0) use(s_alpha_inside(g, 1, alpha), "S_" + std::to_string(alpha));
            if (beta >= m) use(reflection_class(g, 0), "b^G");
            if (beta == 2 * m) use(reflection_class(g, 1), "(ab)^G");
        } else {
            if (alpha > 0) use(s_alpha_inside(g, h.t, alpha), "S_" + std::to_string(alpha));
            if (beta > 0) {
                use(reflection_class(g, 0), "b^G");
                ElementSet omega(g.order());
                for (int k = 1; k < n; k += 2)
                    if (k % h.t != 0) omega.add(g.rotation(k));
                use(omega, "Omega = {a^k : k odd, t∤k}");
            }
        }
    }

    ConnectionSet c = make_connection_set(g, s);
    Subgroup sub = h.resolve(g);
    RegularityResult r = check_regular_set(build_graph(c), sub.elements);
    if (!r.regular || r.alpha != alpha || r.beta != beta)
        throw VerificationFailure(
            "witness_dihedral construction failed for " + h.describe() + " (" +
            std::to_string(alpha) + "," + std::to_string(beta) + "): got " +
            (r.regular ? "(" + std::to_string(r.alpha) + "," + std::to_string(r.beta) + ")"
                       : "not regular"));
    recipe.resolved = s;
    return recipe;
}

}  // namespace regset
