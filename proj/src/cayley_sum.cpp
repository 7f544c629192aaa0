#include "regset/cayley_sum.hpp"

#include <json.hpp>

#include "regset/group_spec.hpp"

namespace regset {

ConnectionSet make_connection_set(const Group& g, const ElementSet& s) {
    if (s.test(0))
        throw InputError("connection set contains the identity");
    ElementSet sq = squares(g);
    int bad = -1;
    s.for_each([&](int x) {
        if (bad == -1 && sq.test(x)) bad = x;
    });
    if (bad != -1)
        throw InputError("connection set contains square element " + g.element_name(bad));
    if (!is_normal_subset(g, s)) {
        // name one offender for the error message
        s.for_each([&](int e) {
            if (bad != -1) return;
            for (int x = 0; x < g.order(); ++x)
                if (!s.test(g.multiply(g.multiply(g.inverse(x), e), x))) { bad = e; break; }
        });
        throw InputError("connection set not conjugation-closed at element " +
                         g.element_name(bad == -1 ? s.min_element() : bad));
    }
    return ConnectionSet{&g, s};
}

CaySGraph build_graph(const ConnectionSet& c) {
    const Group& g = *c.group;
    CaySGraph gr;
    gr.group = &g;
    gr.s = c.s;
    gr.adjacency.assign(g.order(), ElementSet(g.order()));
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            if (c.s.test(g.multiply(x, y))) gr.adjacency[x].add(y);
    return gr;
}

RegularityResult check_regular_set(const CaySGraph& graph, const ElementSet& c) {
    const int n = graph.group->order();
    if (c.empty())
        throw InputError("check_regular_set: empty vertex subset");
    if (c.size() == n)
        throw InputError("check_regular_set: subset is the whole vertex set");
    RegularityResult r;
    int alpha = -1, beta = -1;
    for (int x = 0; x < n; ++x) {
        int into_c = graph.adjacency[x].intersection_size(c);
        if (c.test(x)) {
            if (alpha == -1) alpha = into_c;
            else if (into_c != alpha) {
                r.failing_vertex = x;
                r.failing_inside_degree = into_c;
                return r;
            }
        } else {
            if (beta == -1) beta = into_c;
            else if (into_c != beta) {
                r.failing_vertex = x;
                r.failing_inside_degree = into_c;
                return r;
            }
        }
    }
    r.regular = true;
    r.alpha = alpha;
    r.beta = beta;
    const int k = graph.s.size();
    r.quotient = {{{alpha, k - alpha}, {beta, k - beta}}};
    return r;
}

RegularityResult check_regular_subgroup(const CaySGraph& graph, const Subgroup& h) {
    RegularityResult r = check_regular_set(graph, h.elements);
    auto cosets = right_cosets(*graph.group, h);
    for (const auto& coset : cosets.cosets)
        r.coset_counts.push_back(graph.s.intersection_size(coset));
    return r;
}

PerfectCodeCheck check_perfect_code_conditions(const Group& g, const Subgroup& h,
                                               const ConnectionSet& c) {
    PerfectCodeCheck out;
    const ElementSet& s = c.s;
    const ElementSet& hs = h.elements;

    // (1) direct definition: every vertex of H has 0 neighbors in H, every
    // vertex outside exactly 1. Evaluated directly so that H = G works.
    {
        bool ok = true;
        for (int x = 0; x < g.order() && ok; ++x) {
            int cnt = 0;
            hs.for_each([&](int hh) {
                if (s.test(g.multiply(hh, x))) ++cnt;
            });
            if (hs.test(x) ? cnt != 0 : cnt != 1) ok = false;
        }
        out.is_perfect_code = ok;
    }

    // (2) S ∪ {e} is a right transversal of H
    {
        auto cosets = right_cosets(g, h);
        ElementSet se = s;
        se.add(0);
        bool ok = se.size() == int(cosets.cosets.size());
        for (const auto& coset : cosets.cosets)
            if (se.intersection_size(coset) != 1) ok = false;
        out.is_transversal = ok;
    }

    // (3) [G:H] = |S| + 1 and (S ∪ SS⁻¹) ∩ H ⊆ {e}
    {
        bool ok = h.index() == s.size() + 1;
        if (ok) {
            ElementSet prod = s;
            s.for_each([&](int x) {
                s.for_each([&](int y) { prod.add(g.multiply(x, g.inverse(y))); });
            });
            prod.remove(0);
            if (prod.intersects(hs)) ok = false;
        }
        out.index_condition = ok;
    }

    out.agree = out.is_perfect_code == out.is_transversal &&
                out.is_transversal == out.index_condition;
    if (!out.agree)
        throw VerificationFailure(
            "perfect-code conditions disagree: code=" + std::to_string(out.is_perfect_code) +
            " transversal=" + std::to_string(out.is_transversal) +
            " index=" + std::to_string(out.index_condition));
    return out;
}

TransversalDecomposition decompose_connection_set(const Group& g, const Subgroup& h,
                                                  const ConnectionSet& c) {
    TransversalDecomposition out;
    out.inside = c.s & h.elements;
    ElementSet outside = c.s - h.elements;
    auto cosets = right_cosets(g, h);
    int beta = -1;
    for (size_t i = 1; i < cosets.cosets.size(); ++i) {
        int cnt = outside.intersection_size(cosets.cosets[i]);
        if (beta == -1) beta = cnt;
        else if (cnt != beta)
            throw InputError("not (0,beta)-regular: |S ∩ Hx| varies across cosets (" +
                             std::to_string(beta) + " vs " + std::to_string(cnt) + ")");
    }
    if (beta <= 0) return out;  // S ⊆ H or H = G
    out.parts.assign(beta, ElementSet(g.order()));
    for (size_t i = 1; i < cosets.cosets.size(); ++i) {
        auto members = (outside & cosets.cosets[i]).to_vector();  // ascending
        for (int j = 0; j < beta; ++j) out.parts[j].add(members[j]);
    }
    return out;
}

std::pair<ConnectionSet, ConnectionSet> split_by_subgroup(const Group& g,
                                                          const Subgroup& h,
                                                          const ConnectionSet& c) {
    if (!is_normal_subgroup(g, h))
        throw InputError("split_by_subgroup: H is not normal in G");
    ElementSet inside = c.s & h.elements;
    ElementSet outside = c.s - h.elements;
    return {make_connection_set(g, inside), make_connection_set(g, outside)};
}

QuotientMatrixResult quotient_matrix(const CaySGraph& graph, const ElementSet& c) {
    QuotientMatrixResult out;
    const int n = graph.group->order();
    if (c.empty() || c.size() == n)
        throw InputError("quotient_matrix: both cells must be non-empty");
    int b[2][2] = {{-1, -1}, {-1, -1}};
    for (int x = 0; x < n; ++x) {
        int row = c.test(x) ? 0 : 1;
        int into_c = graph.adjacency[x].intersection_size(c);
        int into_rest = graph.degree(x) - into_c;
        if (b[row][0] == -1) {
            b[row][0] = into_c;
            b[row][1] = into_rest;
        } else if (b[row][0] != into_c || b[row][1] != into_rest) {
            out.witness_vertex = x;
            return out;
        }
    }
    out.equitable = true;
    out.matrix = {{{b[0][0], b[0][1]}, {b[1][0], b[1][1]}}};
    return out;
}

std::string to_dot(const CaySGraph& graph, const ElementSet& highlight) {
    const Group& g = *graph.group;
    std::string dot = "graph cays {\n  node [shape=circle];\n";
    for (int x = 0; x < g.order(); ++x) {
        dot += "  \"" + g.element_name(x) + "\"";
        dot += highlight.test(x) ? " [style=solid];\n" : " [style=filled];\n";
    }
    for (int x = 0; x < g.order(); ++x) {
        graph.adjacency[x].for_each([&](int y) {
            if (y < x) return;  // each edge once
            dot += "  \"" + g.element_name(x) + "\" -- \"" + g.element_name(y) + "\"";
            bool in_x = highlight.test(x), in_y = highlight.test(y);
            if (in_x && in_y) dot += " [style=dashed]";
            else if (in_x != in_y) dot += " [style=bold]";
            dot += ";\n";
        });
    }
    dot += "}\n";
    return dot;
}

std::string regularity_report_json(const CaySGraph& graph, const ElementSet& c) {
    nlohmann::json j;
    j["group_spec"] = group_spec_string(*graph.group);
    j["S"] = graph.s.to_vector();
    j["C"] = c.to_vector();
    RegularityResult r = check_regular_set(graph, c);
    if (r.regular) {
        j["verdict"] = "regular";
        j["alpha"] = r.alpha;
        j["beta"] = r.beta;
        j["quotient_matrix"] = {{r.quotient[0][0], r.quotient[0][1]},
                                {r.quotient[1][0], r.quotient[1][1]}};
    } else {
        j["verdict"] = "not-regular";
        j["failing_vertex"] = r.failing_vertex;
        j["failing_inside_degree"] = r.failing_inside_degree;
    }
    return j.dump(2);
}

}  // namespace regset
