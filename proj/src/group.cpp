#include "regset/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace regset {

namespace {

void check_associativity(const Group& g, bool& sampled_flag) {
    const int n = g.order();
    if (n <= 128) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (g.multiply(g.multiply(x, y), z) !=
                        g.multiply(x, g.multiply(y, z)))
                        throw InputError("non-associative triple (" +
                                         std::to_string(x) + "," + std::to_string(y) +
                                         "," + std::to_string(z) + ")");
        sampled_flag = false;
    } else {
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int k = 0; k < 10 * n; ++k) {
            int x = d(rng), y = d(rng), z = d(rng);
            if (g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z)))
                throw InputError("non-associative triple (" + std::to_string(x) +
                                 "," + std::to_string(y) + "," + std::to_string(z) + ")");
        }
        sampled_flag = true;
    }
}

}  // namespace

Group Group::abelian(std::vector<int> factor_orders) {
    if (factor_orders.empty())
        throw InputError("abelian group needs at least one cyclic factor");
    long long order = 1;
    for (int m : factor_orders) {
        if (m < 2) throw InputError("abelian factor must be >= 2, got " + std::to_string(m));
        order *= m;
        if (order > 1 << 20) throw InputError("abelian group order too large");
    }
    Group g;
    g.kind_ = GroupKind::Abelian;
    g.order_ = int(order);
    g.factor_orders_ = std::move(factor_orders);
    g.table_.resize(g.order_ * g.order_);
    for (int x = 0; x < g.order_; ++x) {
        for (int y = 0; y < g.order_; ++y) {
            // mixed-radix componentwise addition
            int xx = x, yy = y, r = 0, weight = 1;
            for (int m : g.factor_orders_) {
                int cx = xx % m, cy = yy % m;
                xx /= m; yy /= m;
                r += ((cx + cy) % m) * weight;
                weight *= m;
            }
            g.table_[x * g.order_ + y] = r;
        }
    }
    g.build_inverses();
    return g;
}

Group Group::dihedral(int n) {
    if (n < 3) throw InputError("dihedral n must be >= 3, got " + std::to_string(n));
    Group g;
    g.kind_ = GroupKind::Dihedral;
    g.n_ = n;
    g.order_ = 2 * n;
    g.table_.resize(g.order_ * g.order_);
    auto idx = [n](int i, int l) { return ((i % n + n) % n) + n * l; };
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < 2; ++l) {
            for (int k = 0; k < n; ++k) {
                for (int j = 0; j < 2; ++j) {
                    // a^i b^l * a^k b^j = a^{i + (-1)^l k} b^{l+j}
                    int rot = l == 0 ? i + k : i - k;
                    g.table_[idx(i, l) * g.order_ + idx(k, j)] = idx(rot, (l + j) % 2);
                }
            }
        }
    }
    g.build_inverses();
    return g;
}

Group Group::from_table(int order, const std::vector<int>& table) {
    if (order < 1) throw InputError("table group order must be positive");
    if (int(table.size()) != order * order)
        throw InputError("table size must be order^2");
    for (int v : table)
        if (v < 0 || v >= order) throw InputError("table entry out of range");
    Group g;
    g.kind_ = GroupKind::Table;
    g.order_ = order;
    g.table_ = table;
    for (int x = 0; x < order; ++x)
        if (g.multiply(0, x) != x || g.multiply(x, 0) != x)
            throw InputError("index 0 is not a two-sided identity");
    g.build_inverses();
    check_associativity(g, g.associativity_sampled_);
    return g;
}

void Group::build_inverses() {
    inverse_.assign(order_, -1);
    for (int x = 0; x < order_; ++x) {
        for (int y = 0; y < order_; ++y) {
            if (multiply(x, y) == 0 && multiply(y, x) == 0) {
                inverse_[x] = y;
                break;
            }
        }
        if (inverse_[x] == -1)
            throw InputError("element " + std::to_string(x) + " has no inverse");
    }
}

int Group::element_order(int x) const {
    int k = 1, y = x;
    while (y != 0) {
        y = multiply(y, x);
        ++k;
    }
    return k;
}

int Group::rotation(int i) const {
    if (kind_ != GroupKind::Dihedral) throw InputError("rotation(): not a dihedral group");
    return (i % n_ + n_) % n_;
}

int Group::reflection(int i) const {
    if (kind_ != GroupKind::Dihedral) throw InputError("reflection(): not a dihedral group");
    return (i % n_ + n_) % n_ + n_;
}

std::vector<int> Group::coordinates(int x) const {
    if (kind_ != GroupKind::Abelian) throw InputError("coordinates(): not an abelian group");
    std::vector<int> c;
    c.reserve(factor_orders_.size());
    for (int m : factor_orders_) {
        c.push_back(x % m);
        x /= m;
    }
    return c;
}

int Group::from_coordinates(const std::vector<int>& coords) const {
    if (kind_ != GroupKind::Abelian) throw InputError("from_coordinates(): not an abelian group");
    if (coords.size() != factor_orders_.size())
        throw InputError("coordinate count mismatch");
    int r = 0, weight = 1;
    for (size_t i = 0; i < coords.size(); ++i) {
        int m = factor_orders_[i];
        r += ((coords[i] % m + m) % m) * weight;
        weight *= m;
    }
    return r;
}

std::string Group::element_name(int x) const {
    if (x < 0 || x >= order_) throw InputError("element index out of range");
    switch (kind_) {
        case GroupKind::Dihedral: {
            int i = x % n_, l = x / n_;
            if (l == 0) return i == 0 ? "e" : "a^" + std::to_string(i);
            return i == 0 ? "b" : "a^" + std::to_string(i) + "*b";
        }
        case GroupKind::Abelian: {
            auto c = coordinates(x);
            std::string s = "(";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(c[i]);
            }
            return s + ")";
        }
        case GroupKind::Table:
            return "#" + std::to_string(x);
    }
    return "?";
}

int Group::parse_element(const std::string& name) const {
    if (name.empty()) throw InputError("empty element name");
    if (name[0] == '#') {
        int v = -1;
        auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
        if (ec != std::errc() || p != name.data() + name.size() || v < 0 || v >= order_)
            throw InputError("bad element index '" + name + "'");
        return v;
    }
    if (kind_ == GroupKind::Dihedral) {
        if (name == "e") return 0;
        if (name == "b") return n_;
        std::string body = name;
        // strip optional ^ and * separators: a^3*b == a3b
        std::string flat;
        for (char c : body)
            if (c != '^' && c != '*') flat += c;
        if (flat[0] != 'a') throw InputError("bad dihedral element '" + name + "'");
        bool refl = flat.back() == 'b';
        std::string digits = flat.substr(1, flat.size() - 1 - (refl ? 1 : 0));
        if (digits.empty()) {
            if (!refl) throw InputError("bad dihedral element '" + name + "'");
            return reflection(1);  // "ab"
        }
        int i = -1;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec != std::errc() || p != digits.data() + digits.size())
            throw InputError("bad dihedral element '" + name + "'");
        return refl ? reflection(i) : rotation(i);
    }
    if (kind_ == GroupKind::Abelian) {
        std::string body = name;
        if (body[0] == 'g') body = body.substr(1);
        if (!body.empty() && body[0] == '(') {
            if (body.back() != ')') throw InputError("bad tuple '" + name + "'");
            std::vector<int> coords;
            std::stringstream ss(body.substr(1, body.size() - 2));
            std::string item;
            while (std::getline(ss, item, ','))
                coords.push_back(std::stoi(item));
            return from_coordinates(coords);
        }
        if (factor_orders_.size() == 1) {
            int v = std::stoi(body);
            return from_coordinates({v});
        }
        throw InputError("abelian element must use tuple syntax: '" + name + "'");
    }
    throw InputError("table group elements must use '#<index>' syntax: '" + name + "'");
}

ElementSet squares(const Group& g) {
    ElementSet sq(g.order());
    for (int y = 0; y < g.order(); ++y) sq.add(g.multiply(y, y));
    return sq;
}

ElementSet non_squares(const Group& g) {
    return ElementSet::full(g.order()) - squares(g);
}

std::vector<ElementSet> conjugacy_classes_generic(const Group& g) {
    std::vector<ElementSet> classes;
    std::vector<bool> seen(g.order(), false);
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        ElementSet cls(g.order());
        for (int h = 0; h < g.order(); ++h) {
            int y = g.multiply(g.multiply(h, x), g.inverse(h));
            cls.add(y);
            seen[y] = true;
        }
        classes.push_back(cls);
    }
    return classes;
}

std::vector<ElementSet> conjugacy_classes(const Group& g) {
    if (g.kind() == GroupKind::Abelian) {
        std::vector<ElementSet> classes;
        classes.reserve(g.order());
        for (int x = 0; x < g.order(); ++x)
            classes.push_back(ElementSet::of(g.order(), {x}));
        return classes;
    }
    if (g.kind() == GroupKind::Dihedral) {
        const int n = g.dihedral_n();
        std::vector<ElementSet> classes;
        classes.push_back(ElementSet::of(g.order(), {0}));
        if (n % 2 == 0) {
            const int m = n / 2;
            // {a^i, a^-i} for 1 <= i <= m-1, then {a^m}, then the two
            // reflection classes split by rotation parity
            for (int i = 1; i < m; ++i) {
                ElementSet c(g.order());
                c.add(g.rotation(i));
                c.add(g.rotation(-i));
                classes.push_back(c);
            }
            classes.push_back(ElementSet::of(g.order(), {g.rotation(m)}));
            ElementSet bg(g.order()), abg(g.order());
            for (int j = 0; j < m; ++j) {
                bg.add(g.reflection(2 * j));
                abg.add(g.reflection(2 * j + 1));
            }
            classes.push_back(bg);
            classes.push_back(abg);
        } else {
            for (int i = 1; i <= (n - 1) / 2; ++i) {
                ElementSet c(g.order());
                c.add(g.rotation(i));
                c.add(g.rotation(-i));
                classes.push_back(c);
            }
            ElementSet bg(g.order());
            for (int j = 0; j < n; ++j) bg.add(g.reflection(j));
            classes.push_back(bg);
        }
        std::sort(classes.begin(), classes.end(),
                  [](const ElementSet& a, const ElementSet& b) {
                      return a.min_element() < b.min_element();
                  });
#ifndef NDEBUG
        auto generic = conjugacy_classes_generic(g);
        if (classes.size() != generic.size())
            throw VerificationFailure("dihedral class count disagrees with orbit computation");
        for (size_t i = 0; i < classes.size(); ++i)
            if (!(classes[i] == generic[i]))
                throw VerificationFailure("dihedral class list disagrees with orbit computation");
#endif
        return classes;
    }
    return conjugacy_classes_generic(g);
}

Subgroup generate_subgroup(const Group& g, const std::vector<int>& gens) {
    for (int x : gens)
        if (x < 0 || x >= g.order()) throw InputError("generator index out of range");
    ElementSet h(g.order());
    h.add(0);
    std::vector<int> frontier = {0};
    for (int x : gens)
        if (!h.test(x)) { h.add(x); frontier.push_back(x); }
    // fixpoint closure under multiplication
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            auto members = h.to_vector();
            for (int y : members) {
                for (int z : {g.multiply(x, y), g.multiply(y, x)}) {
                    if (!h.test(z)) { h.add(z); next.push_back(z); }
                }
            }
        }
        frontier = std::move(next);
    }
    return Subgroup{&g, h, gens, ""};
}

std::vector<Subgroup> all_subgroups(const Group& g, int order_budget) {
    std::vector<Subgroup> result;
    if (g.kind() == GroupKind::Dihedral) {
        const int n = g.dihedral_n();
        for (int t = 1; t <= n; ++t) {
            if (n % t != 0) continue;
            Subgroup cyc = generate_subgroup(g, t == n ? std::vector<int>{} : std::vector<int>{g.rotation(t)});
            cyc.tag = "cyclic(t=" + std::to_string(t) + ")";
            result.push_back(std::move(cyc));
            for (int s = 0; s < t; ++s) {
                Subgroup mix = t == n
                    ? generate_subgroup(g, {g.reflection(s)})
                    : generate_subgroup(g, {g.rotation(t), g.reflection(s)});
                mix.tag = "mixed(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")";
                result.push_back(std::move(mix));
            }
        }
    } else {
        if (g.order() > order_budget)
            throw BudgetExceeded("all_subgroups: order " + std::to_string(g.order()) +
                                 " exceeds budget " + std::to_string(order_budget));
        std::map<std::vector<int>, Subgroup> found;
        Subgroup trivial = generate_subgroup(g, {});
        std::vector<Subgroup> queue = {trivial};
        found.emplace(trivial.elements.to_vector(), trivial);
        while (!queue.empty()) {
            Subgroup h = std::move(queue.back());
            queue.pop_back();
            for (int x = 1; x < g.order(); ++x) {
                if (h.elements.test(x)) continue;
                auto gens = h.generators;
                gens.push_back(x);
                Subgroup bigger = generate_subgroup(g, gens);
                auto key = bigger.elements.to_vector();
                if (!found.count(key)) {
                    found.emplace(key, bigger);
                    queue.push_back(std::move(bigger));
                }
            }
        }
        for (auto& [k, h] : found) result.push_back(std::move(h));
    }
    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements.to_vector() < b.elements.to_vector();
    });
    return result;
}

CosetDecomposition right_cosets(const Group& g, const Subgroup& h) {
    CosetDecomposition d;
    d.coset_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (d.coset_of[x] != -1) continue;
        ElementSet coset(g.order());
        h.elements.for_each([&](int hh) { coset.add(g.multiply(hh, x)); });
        int idx = int(d.cosets.size());
        coset.for_each([&](int y) { d.coset_of[y] = idx; });
        d.representatives.push_back(coset.min_element());
        d.cosets.push_back(std::move(coset));
    }
    return d;
}

bool is_subgroup(const Group& g, const ElementSet& h) {
    if (!h.test(0)) return false;
    bool ok = true;
    h.for_each([&](int x) {
        if (!h.test(g.inverse(x))) ok = false;
        h.for_each([&](int y) {
            if (!h.test(g.multiply(x, y))) ok = false;
        });
    });
    return ok && g.order() % h.size() == 0;
}

bool is_normal_subgroup(const Group& g, const Subgroup& h) {
    return is_normal_subset(g, h.elements);
}

bool is_normal_subset(const Group& g, const ElementSet& s) {
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        s.for_each([&](int e) {
            if (!s.test(g.multiply(g.multiply(g.inverse(x), e), x))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace regset
