#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regset/element_set.hpp"
#include "regset/errors.hpp"

namespace regset {

enum class GroupKind { Abelian, Dihedral, Table };

// Finite group on dense element indices 0..order-1, index 0 is the identity.
//
// Abelian groups are direct products of cyclic groups C_{m_1} x ... x C_{m_k}
// with mixed-radix element encoding. Dihedral D_{2n} encodes a^i b^l as
// i + n*l. Table groups carry an explicit multiplication table.
class Group {
public:
    static Group abelian(std::vector<int> factor_orders);
    static Group dihedral(int n);
    // Validates group axioms. Associativity is checked exhaustively for
    // order <= 128, otherwise on 10*order random triples (flagged).
    static Group from_table(int order, const std::vector<int>& table);

    GroupKind kind() const { return kind_; }
    int order() const { return order_; }
    int multiply(int x, int y) const { return table_[x * order_ + y]; }
    int inverse(int x) const { return inverse_[x]; }
    int element_order(int x) const;

    const std::vector<int>& factor_orders() const { return factor_orders_; }
    int dihedral_n() const { return n_; }
    bool associativity_sampled() const { return associativity_sampled_; }

    // Dihedral helpers (throw for other kinds).
    int rotation(int i) const;        // index of a^i (i taken mod n)
    int reflection(int i) const;      // index of a^i b

    // Abelian helper: mixed-radix coordinates of an element.
    std::vector<int> coordinates(int x) const;
    int from_coordinates(const std::vector<int>& coords) const;

    std::string element_name(int x) const;
    // Parses names produced by element_name plus CLI shorthands:
    // dihedral "e", "b", "a3", "a3b"; abelian "(1,2,0)" or "g(1,2,0)" or
    // "g3" for single-factor groups; any kind accepts a bare index "#12".
    int parse_element(const std::string& name) const;

private:
    Group() = default;
    void build_inverses();

    GroupKind kind_ = GroupKind::Table;
    int order_ = 0;
    int n_ = 0;  // dihedral only
    std::vector<int> factor_orders_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    bool associativity_sampled_ = false;
};

struct Subgroup {
    const Group* group = nullptr;
    ElementSet elements;
    std::vector<int> generators;
    std::string tag;  // e.g. "cyclic(t=2)" or "mixed(t=2,s=1)" for dihedral

    int order() const { return elements.size(); }
    int index() const { return group->order() / elements.size(); }
};

struct CosetDecomposition {
    std::vector<ElementSet> cosets;      // H first, then by minimal element
    std::vector<int> representatives;    // minimal element of each coset
    std::vector<int> coset_of;           // element index -> coset index
};

// Sq(G) = { y^2 : y in G }.
ElementSet squares(const Group& g);
ElementSet non_squares(const Group& g);

// Partition of G into conjugacy classes, ordered by minimal element.
// Dihedral groups use the closed-form class lists; abelian groups return
// singletons; table groups use the generic orbit computation.
std::vector<ElementSet> conjugacy_classes(const Group& g);
// Generic orbit computation, any kind. Used as the dihedral cross-check.
std::vector<ElementSet> conjugacy_classes_generic(const Group& g);

Subgroup generate_subgroup(const Group& g, const std::vector<int>& gens);

// Every subgroup exactly once, sorted by (order, element list). Dihedral
// groups enumerate the two closed-form families for any n; other kinds run
// a generic closure search, gated by the order budget.
std::vector<Subgroup> all_subgroups(const Group& g, int order_budget = 256);

CosetDecomposition right_cosets(const Group& g, const Subgroup& h);

bool is_subgroup(const Group& g, const ElementSet& h);
bool is_normal_subgroup(const Group& g, const Subgroup& h);
bool is_normal_subset(const Group& g, const ElementSet& s);

}  // namespace regset
