#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "regset/group.hpp"

namespace regset {

// Normal square-free subset of G, the connection set of a Cayley sum graph.
struct ConnectionSet {
    const Group* group = nullptr;
    ElementSet s;
};

// CayS(G, S): vertex x adjacent to y iff x*y in S.
struct CaySGraph {
    const Group* group = nullptr;
    ElementSet s;
    std::vector<ElementSet> adjacency;  // one row per vertex

    int degree(int x) const { return adjacency[x].size(); }
};

struct RegularityResult {
    bool regular = false;
    int alpha = -1;
    int beta = -1;
    int failing_vertex = -1;
    int failing_inside_degree = -1;
    // [[alpha, k-alpha], [beta, k-beta]] when regular, k = |S|
    std::array<std::array<int, 2>, 2> quotient{};
    // |S ∩ Hx| per coset, filled only by the subgroup overload
    std::vector<int> coset_counts;
};

struct PerfectCodeCheck {
    bool is_perfect_code = false;   // (1) direct graph check
    bool is_transversal = false;    // (2) S ∪ {e} right transversal of H
    bool index_condition = false;   // (3) [G:H] = |S|+1 and (S ∪ SS⁻¹) ∩ H ⊆ {e}
    bool agree = false;
};

struct TransversalDecomposition {
    ElementSet inside;                       // S ∩ H
    std::vector<ElementSet> parts;           // T_1..T_beta, each ∪ {e} a transversal
};

struct QuotientMatrixResult {
    bool equitable = false;
    std::array<std::array<int, 2>, 2> matrix{};
    int witness_vertex = -1;  // a vertex violating equitability, when not
};

// Validates e ∉ S, S ⊆ NSq(G), S normal; throws InputError naming the
// offending element otherwise.
ConnectionSet make_connection_set(const Group& g, const ElementSet& s);

CaySGraph build_graph(const ConnectionSet& c);

// Throws InputError for degenerate C (empty or all of V).
RegularityResult check_regular_set(const CaySGraph& graph, const ElementSet& c);
RegularityResult check_regular_subgroup(const CaySGraph& graph, const Subgroup& h);

// Evaluates the three equivalent perfect-code conditions and throws
// VerificationFailure if they disagree.
PerfectCodeCheck check_perfect_code_conditions(const Group& g, const Subgroup& h,
                                               const ConnectionSet& c);

// Requires |S ∩ Hx| constant over cosets x ∉ H (throws InputError if not);
// parts are chosen greedily by element index within each coset.
TransversalDecomposition decompose_connection_set(const Group& g, const Subgroup& h,
                                                  const ConnectionSet& c);

// H must be normal in G. Splits S into S ∩ H and S ∩ (G \ H), both valid
// connection sets.
std::pair<ConnectionSet, ConnectionSet> split_by_subgroup(const Group& g,
                                                          const Subgroup& h,
                                                          const ConnectionSet& c);

QuotientMatrixResult quotient_matrix(const CaySGraph& graph, const ElementSet& c);

// DOT export: vertices in `highlight` hollow, edges crossing the boundary
// bold, edges inside `highlight` dashed.
std::string to_dot(const CaySGraph& graph, const ElementSet& highlight);

// JSON report {group_spec, S, C, verdict, alpha, beta, quotient_matrix}.
std::string regularity_report_json(const CaySGraph& graph, const ElementSet& c);

}  // namespace regset
