#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "regset/abelian_theory.hpp"
#include "regset/cayley_sum.hpp"
#include "regset/dihedral_theory.hpp"
#include "regset/group_spec.hpp"
#include "regset/oracle.hpp"

using nlohmann::json;
using namespace regset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitDisagreement = 3;

EnumerationBudget budget_from_env() {
    EnumerationBudget b;
    if (const char* env = std::getenv("REGSET_BUDGET"))
        b.max_candidate_sets = std::strtoull(env, nullptr, 10);
    return b;
}

std::vector<int> parse_element_list(const Group& g, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    // abelian tuples contain commas; split only outside parentheses
    std::string cur;
    int depth = 0;
    for (char c : csv) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(g.parse_element(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(g.parse_element(cur));
    return out;
}

// Selector: "gens=a2,ab" | "family=cyclic:3" | "family=mixed:4,2"
Subgroup parse_subgroup(const Group& g, const std::string& selector) {
    if (selector.rfind("gens=", 0) == 0)
        return generate_subgroup(g, parse_element_list(g, selector.substr(5)));
    if (selector.rfind("family=", 0) == 0) {
        if (g.kind() != GroupKind::Dihedral)
            throw InputError("family= selector needs a dihedral group");
        std::string body = selector.substr(7);
        DihedralSubgroup fam;
        fam.n = g.dihedral_n();
        if (body.rfind("cyclic:", 0) == 0) {
            fam.family = DihedralSubgroup::Family::Cyclic;
            fam.t = std::stoi(body.substr(7));
        } else if (body.rfind("mixed:", 0) == 0) {
            fam.family = DihedralSubgroup::Family::Mixed;
            std::string params = body.substr(6);
            auto comma = params.find(',');
            if (comma == std::string::npos) throw InputError("mixed family needs t,s");
            fam.t = std::stoi(params.substr(0, comma));
            fam.s = std::stoi(params.substr(comma + 1));
        } else {
            throw InputError("unknown family '" + body + "'");
        }
        return fam.resolve(g);
    }
    throw InputError("subgroup selector must start with gens= or family=");
}

DihedralSubgroup family_of(const Group& g, const Subgroup& h) {
    for (const auto& fam : dihedral_subgroup_families(g.dihedral_n()))
        if (fam.resolve(g).elements == h.elements) return fam;
    throw InputError("subgroup does not match any dihedral family (is it G itself?)");
}

json names_of(const Group& g, const ElementSet& s) {
    json arr = json::array();
    s.for_each([&](int x) { arr.push_back(g.element_name(x)); });
    return arr;
}

json pairs_json(const std::set<std::pair<int, int>>& ps) {
    json arr = json::array();
    for (auto [a, b] : ps) arr.push_back({a, b});
    return arr;
}

std::set<std::pair<int, int>> theory_pairs(const Group& g, const Subgroup& h) {
    if (g.kind() == GroupKind::Abelian)
        return feasible_pairs_abelian(g, h).materialize();
    if (g.kind() == GroupKind::Dihedral)
        return feasible_pairs_dihedral(g.dihedral_n(), family_of(g, h)).pairs;
    throw InputError("no closed-form predictor for table groups; use --method oracle");
}

int run(int argc, char** argv) {
    CLI::App app{"Regular sets and perfect codes in Cayley sum graphs"};
    app.require_subcommand(1);

    std::string group_spec, subgroup_sel, pair_str, format = "json", from_file,
                sweep_spec, method = "both", s_elems, c_elems;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("group", group_spec, "group spec: abelian:2,4 | dihedral:8 | table:<path>")
            ->required();
    };

    auto* cmd_squares = app.add_subcommand("squares", "square / non-square elements");
    add_group(cmd_squares);
    auto* cmd_classes = app.add_subcommand("classes", "conjugacy classes");
    add_group(cmd_classes);
    auto* cmd_subgroups = app.add_subcommand("subgroups", "all subgroups");
    add_group(cmd_subgroups);
    auto* cmd_lh = app.add_subcommand("lh", "L(H): minimum non-square count over cosets");
    add_group(cmd_lh);
    cmd_lh->add_option("--subgroup", subgroup_sel, "gens=... or family=...")->required();
    auto* cmd_pairs = app.add_subcommand("pairs", "feasible (alpha,beta) pairs");
    add_group(cmd_pairs);
    cmd_pairs->add_option("--subgroup", subgroup_sel)->required();
    cmd_pairs->add_option("--method", method, "theory | oracle | both");
    auto* cmd_witness = app.add_subcommand("witness", "connection set realizing a pair");
    add_group(cmd_witness);
    cmd_witness->add_option("--subgroup", subgroup_sel)->required();
    cmd_witness->add_option("--pair", pair_str, "alpha,beta")->required();
    cmd_witness->add_option("--format", format, "json | dot");
    auto* cmd_verify = app.add_subcommand("verify", "theory vs oracle for one instance, or re-check a report");
    cmd_verify->add_option("group", group_spec);
    cmd_verify->add_option("--subgroup", subgroup_sel);
    cmd_verify->add_option("--from-file", from_file, "re-check an exported JSON report");
    auto* cmd_sweep = app.add_subcommand("sweep", "theory vs oracle over a grid");
    cmd_sweep->add_option("spec", sweep_spec, "abelian:max_order=16 | dihedral:n=3..14")->required();
    cmd_sweep->add_option("--format", format, "json | tsv");
    auto* cmd_export = app.add_subcommand("export", "regularity report / DOT for explicit S and C");
    add_group(cmd_export);
    cmd_export->add_option("--s", s_elems, "connection set elements")->required();
    cmd_export->add_option("--c", c_elems, "candidate set elements (or use --subgroup)");
    cmd_export->add_option("--subgroup", subgroup_sel);
    cmd_export->add_option("--format", format, "json | dot");

    CLI11_PARSE(app, argc, argv);
    EnumerationBudget budget = budget_from_env();

    if (cmd_squares->parsed()) {
        Group g = parse_group_spec(group_spec);
        json j{{"group", group_spec_string(g)},
               {"squares", names_of(g, squares(g))},
               {"non_squares", names_of(g, non_squares(g))}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (cmd_classes->parsed()) {
        Group g = parse_group_spec(group_spec);
        json arr = json::array();
        for (const auto& cls : conjugacy_classes(g)) arr.push_back(names_of(g, cls));
        std::cout << json{{"group", group_spec_string(g)}, {"classes", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    if (cmd_subgroups->parsed()) {
        Group g = parse_group_spec(group_spec);
        json arr = json::array();
        for (const auto& h : all_subgroups(g)) {
            json e{{"order", h.order()}, {"elements", names_of(g, h.elements)}};
            if (!h.tag.empty()) e["family"] = h.tag;
            arr.push_back(e);
        }
        std::cout << json{{"group", group_spec_string(g)}, {"subgroups", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    if (cmd_lh->parsed()) {
        Group g = parse_group_spec(group_spec);
        Subgroup h = parse_subgroup(g, subgroup_sel);
        LValue l = g.kind() == GroupKind::Abelian ? l_of_h_abelian_closed_form(g, h)
                                                  : l_of_h_bruteforce(g, h);
        json j{{"group", group_spec_string(g)}, {"subgroup", names_of(g, h.elements)}};
        if (l.branch == LBranch::WholeGroup) {
            j["L"] = "infinity";
            j["branch"] = "whole-group";
        } else {
            j["L"] = l.value;
            j["branch"] = l.branch == LBranch::SqInsideH ? "sq-inside-H" : "has-outside-square";
            j["argmin_coset_representative"] = g.element_name(l.argmin_representative);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (cmd_pairs->parsed()) {
        Group g = parse_group_spec(group_spec);
        Subgroup h = parse_subgroup(g, subgroup_sel);
        json j{{"group", group_spec_string(g)}, {"subgroup", names_of(g, h.elements)}};
        bool want_theory = method != "oracle", want_oracle = method != "theory";
        std::set<std::pair<int, int>> th, orc;
        if (want_theory) {
            th = theory_pairs(g, h);
            j["pairs_theory"] = pairs_json(th);
        }
        if (want_oracle) {
            orc = enumerate_pairs(g, h, budget).pair_set();
            j["pairs_oracle"] = pairs_json(orc);
        }
        if (want_theory && want_oracle) j["agree"] = th == orc;
        std::cout << j.dump(2) << "\n";
        if (want_theory && want_oracle && th != orc) return kExitDisagreement;
        return kExitOk;
    }
    if (cmd_witness->parsed()) {
        Group g = parse_group_spec(group_spec);
        Subgroup h = parse_subgroup(g, subgroup_sel);
        auto comma = pair_str.find(',');
        if (comma == std::string::npos) throw InputError("--pair needs alpha,beta");
        int alpha = std::stoi(pair_str.substr(0, comma));
        int beta = std::stoi(pair_str.substr(comma + 1));
        ElementSet s(g.order());
        json ingredients = json::array();
        if (g.kind() == GroupKind::Abelian) {
            s = witness_abelian(g, h, alpha, beta).s;
            ingredients.push_back("per-coset non-square selection");
        } else if (g.kind() == GroupKind::Dihedral) {
            WitnessRecipe rec = witness_dihedral(g, family_of(g, h), alpha, beta);
            s = rec.resolved;
            for (const auto& ing : rec.ingredients) ingredients.push_back(ing);
        } else {
            throw InputError("witness construction needs an abelian or dihedral group");
        }
        CaySGraph graph = build_graph(make_connection_set(g, s));
        if (format == "dot") {
            std::cout << to_dot(graph, h.elements);
        } else {
            json j{{"group", group_spec_string(g)},
                   {"subgroup", names_of(g, h.elements)},
                   {"alpha", alpha},
                   {"beta", beta},
                   {"ingredients", ingredients},
                   {"S", names_of(g, s)}};
            std::cout << j.dump(2) << "\n";
        }
        return kExitOk;
    }
    if (cmd_verify->parsed()) {
        if (!from_file.empty()) {
            std::ifstream in(from_file);
            if (!in) throw InputError("cannot open '" + from_file + "'");
            json j;
            in >> j;
            Group g = parse_group_spec(j["group_spec"].get<std::string>());
            ElementSet s(g.order()), c(g.order());
            for (int x : j["S"].get<std::vector<int>>()) s.add(x);
            for (int x : j["C"].get<std::vector<int>>()) c.add(x);
            CaySGraph graph = build_graph(make_connection_set(g, s));
            RegularityResult r = check_regular_set(graph, c);
            std::string verdict = r.regular ? "regular" : "not-regular";
            bool match = verdict == j["verdict"].get<std::string>() &&
                         (!r.regular || (r.alpha == j["alpha"].get<int>() &&
                                         r.beta == j["beta"].get<int>()));
            std::cout << json{{"recomputed_verdict", verdict}, {"match", match}}.dump(2) << "\n";
            return match ? kExitOk : kExitDisagreement;
        }
        if (group_spec.empty() || subgroup_sel.empty())
            throw InputError("verify needs a group and --subgroup, or --from-file");
        Group g = parse_group_spec(group_spec);
        Subgroup h = parse_subgroup(g, subgroup_sel);
        auto th = theory_pairs(g, h);
        auto orc = enumerate_pairs(g, h, budget).pair_set();
        json j{{"group", group_spec_string(g)},
               {"subgroup", names_of(g, h.elements)},
               {"pairs_theory", pairs_json(th)},
               {"pairs_oracle", pairs_json(orc)},
               {"agree", th == orc}};
        std::cout << j.dump(2) << "\n";
        return th == orc ? kExitOk : kExitDisagreement;
    }
    if (cmd_sweep->parsed()) {
        std::vector<SweepResult> results;
        if (sweep_spec.rfind("abelian:max_order=", 0) == 0) {
            results = verify_abelian_sweep(std::stoi(sweep_spec.substr(18)), budget);
        } else if (sweep_spec.rfind("dihedral:n=", 0) == 0) {
            std::string range = sweep_spec.substr(11);
            auto dots = range.find("..");
            if (dots == std::string::npos) throw InputError("dihedral sweep needs n=lo..hi");
            results = verify_dihedral_sweep(std::stoi(range.substr(0, dots)),
                                            std::stoi(range.substr(dots + 2)), budget);
        } else {
            throw InputError("sweep spec must be abelian:max_order=N or dihedral:n=lo..hi");
        }
        bool all_agree = true;
        if (format == "tsv") {
            std::cout << "instance\tagree\tskipped\tonly_theory\tonly_oracle\n";
            for (const auto& r : results) {
                std::cout << r.instance << "\t" << (r.agree ? "yes" : "no") << "\t"
                          << (r.skipped ? "yes" : "no") << "\t" << r.only_theory.size()
                          << "\t" << r.only_oracle.size() << "\n";
                all_agree = all_agree && r.agree;
            }
        } else {
            json arr = json::array();
            for (const auto& r : results) {
                json e{{"instance", r.instance}, {"agree", r.agree}, {"skipped", r.skipped}};
                if (!r.only_theory.empty()) e["only_theory"] = r.only_theory;
                if (!r.only_oracle.empty()) e["only_oracle"] = r.only_oracle;
                arr.push_back(e);
                all_agree = all_agree && r.agree;
            }
            std::cout << json{{"results", arr}, {"all_agree", all_agree}}.dump(2) << "\n";
        }
        return all_agree ? kExitOk : kExitDisagreement;
    }
    if (cmd_export->parsed()) {
        Group g = parse_group_spec(group_spec);
        ElementSet s(g.order());
        for (int x : parse_element_list(g, s_elems)) s.add(x);
        ElementSet c(g.order());
        if (!subgroup_sel.empty()) {
            c = parse_subgroup(g, subgroup_sel).elements;
        } else if (!c_elems.empty()) {
            for (int x : parse_element_list(g, c_elems)) c.add(x);
        } else {
            throw InputError("export needs --c or --subgroup");
        }
        CaySGraph graph = build_graph(make_connection_set(g, s));
        if (format == "dot")
            std::cout << to_dot(graph, c);
        else
            std::cout << regularity_report_json(graph, c) << "\n";
        return kExitOk;
    }
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InfeasiblePair& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
