#include "lvder/classification.hpp"
#include "lvder/io.hpp"
#include "lvder/parallel.hpp"
#include "lvder/rules.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace lvder;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

struct Options {
    bool json = false;
    std::string input_format = "auto";
    std::string file;
    std::string map_file;
    std::string out_dir;
    bool explain = false;
    std::vector<std::int64_t> seeds = {0, 1, 2, 3, 4};
    bool literal_table = false;
    bool orientations = false;
    std::vector<std::string> cases;
    std::size_t census_n = 5;
};

InputFormat format_of(const std::string& name) {
    if (name == "matrix") return InputFormat::Matrix;
    if (name == "graph") return InputFormat::Graph;
    return InputFormat::Auto;
}

std::string one(std::size_t i) { return std::to_string(i + 1); }

ordered_json matrix_json(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json set_json(IndexSet s) {
    ordered_json out = ordered_json::array();
    for (auto i : s.items()) out.push_back(i + 1);
    return out;
}

ordered_json assignment_json(const Assignment& a) {
    ordered_json out = ordered_json::object();
    for (const auto& [name, value] : a) out[name] = to_string(value);
    return out;
}

std::string assignment_text(const Assignment& a) {
    std::string out;
    for (const auto& [name, value] : a) out += (out.empty() ? "" : " ") + name + "=" + to_string(value);
    return out.empty() ? "(none)" : out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_derive(const Options& o) {
    const LVAlgebra a = load_algebra(o.file, format_of(o.input_format));
    const DerivationSpace der = derivation_space(a);
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        for (std::size_t m = 0; m < der.maps.size(); ++m) {
            std::ostringstream name;
            name << "map_" << std::setw(3) << std::setfill('0') << m + 1 << ".txt";
            std::ofstream out(std::filesystem::path(o.out_dir) / name.str());
            if (!out) throw ParseError(o.out_dir + ": cannot write " + name.str());
            write_linear_map(out, der.maps[m]);
        }
    }
    if (o.json) {
        ordered_json j;
        j["n"] = a.dim();
        j["dim"] = der.dim();
        j["maps"] = ordered_json::array();
        for (const auto& m : der.maps) j["maps"].push_back(matrix_json(m.mat));
        emit(j);
        return kOk;
    }
    std::cout << "dim " << der.dim() << '\n';
    for (std::size_t m = 0; m < der.maps.size(); ++m) {
        std::cout << "# map " << m + 1 << '\n';
        write_linear_map(std::cout, der.maps[m]);
    }
    return kOk;
}

int cmd_check(const Options& o) {
    const LVAlgebra a = load_algebra(o.file, format_of(o.input_format));
    const LinearMap d = load_linear_map(o.map_file);
    const DerivationCheck check = is_derivation(a, d);
    if (o.json) {
        ordered_json j;
        j["derivation"] = check.ok;
        j["witness"] = check.witness ? ordered_json::array({check.witness->first + 1, check.witness->second + 1})
                                     : ordered_json(nullptr);
        emit(j);
    } else if (check.ok) {
        std::cout << "PASS\n";
    } else {
        std::cout << "FAIL witness (" << one(check.witness->first) << "," << one(check.witness->second) << ")\n";
    }
    return check.ok ? kOk : kVerificationFailure;
}

int cmd_graph(const Options& o) {
    const LVAlgebra a = load_algebra(o.file, format_of(o.input_format));
    const WeightedGraph g = graph_of(a);
    const SupportSets ss = support_sets(a);
    const bool canon = a.dim() <= kMaxCanonicalVertices;
    if (o.json) {
        ordered_json j;
        j["n"] = a.dim();
        j["gamma"] = gamma(a);
        j["dashed"] = ordered_json::array();
        for (const auto& e : g.dashed_edges())
            j["dashed"].push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"w", to_string(e.w)}});
        j["S"] = ordered_json::array();
        j["N"] = ordered_json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) {
            j["S"].push_back(set_json(ss.s[k]));
            j["N"].push_back(set_json(ss.nsets[k]));
        }
        if (canon) {
            j["canonical"] = ordered_json::array();
            for (const auto& e : canonical_form(g).dashed_edges())
                j["canonical"].push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"w", to_string(e.w)}});
        } else {
            j["canonical"] = nullptr;
        }
        emit(j);
        return kOk;
    }
    std::cout << "n " << a.dim() << "\ngamma " << gamma(a) << '\n';
    for (const auto& e : g.dashed_edges())
        std::cout << "dashed " << one(e.i) << " " << one(e.j) << " " << to_string(e.w) << '\n';
    for (std::size_t k = 0; k < a.dim(); ++k) std::cout << "S_" << one(k) << " " << to_string(ss.s[k]) << '\n';
    for (std::size_t k = 0; k < a.dim(); ++k) std::cout << "N_" << one(k) << " " << to_string(ss.nsets[k]) << '\n';
    if (canon) {
        std::cout << "canonical\n";
        write_graph(std::cout, canonical_form(g));
    } else {
        std::cout << "canonical skipped (n > " << kMaxCanonicalVertices << ")\n";
    }
    return kOk;
}

int cmd_rules(const Options& o) {
    const LVAlgebra a = load_algebra(o.file, format_of(o.input_format));
    const auto sets = all_rules(a);
    const char* families[] = {"support", "dashed-pair", "cross-weight", "apex"};
    const Subspace over = constrained_space(sets);
    const DerivationSpace der = derivation_space(a);
    const bool contained = subspace_contains(over, der.space);
    if (o.json) {
        ordered_json j;
        j["families"] = ordered_json::array();
        for (std::size_t f = 0; f < sets.size(); ++f) {
            ordered_json fam;
            fam["name"] = families[f];
            fam["rows"] = sets[f].size();
            if (o.explain) fam["provenance"] = sets[f].provenance;
            j["families"].push_back(fam);
        }
        j["constrained_dim"] = over.dim();
        j["derivation_dim"] = der.dim();
        j["rule_gap"] = over.dim() - der.dim();
        j["contains_derivations"] = contained;
        emit(j);
    } else {
        for (std::size_t f = 0; f < sets.size(); ++f) {
            std::cout << families[f] << " " << sets[f].size() << " rows\n";
            if (o.explain)
                for (std::size_t r = 0; r < sets[f].size(); ++r)
                    std::cout << "  " << r + 1 << "  " << sets[f].provenance[r] << '\n';
        }
        std::cout << "constrained dim " << over.dim() << "\nderivation dim " << der.dim() << "\nrule gap "
                  << over.dim() - der.dim() << '\n';
        if (!contained) std::cout << "WARNING: constraints exclude an exact derivation\n";
    }
    return contained ? kOk : kVerificationFailure;
}

ordered_json report_json(const CaseReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["status"] = r.pass() ? "PASS" : "FAIL";
    j["claim"] = r.claim;
    j["literal_table"] = r.literal_table;
    j["instantiation"] = assignment_json(r.instantiation);
    j["expected_dim"] = r.expected_dim;
    j["computed_dim"] = r.computed_dim;
    j["subspace_match"] = r.subspace_match;
    j["rule_gap"] = r.rule_gap;
    j["seed_stable"] = r.seed_stable;
    j["seeds"] = ordered_json::array();
    for (const auto& s : r.seeds)
        j["seeds"].push_back({{"seed", s.seed},
                              {"assignment", assignment_json(s.assignment)},
                              {"computed_dim", s.computed_dim},
                              {"subspace_match", s.subspace_match},
                              {"rule_gap", s.rule_gap}});
    j["discrepancies"] = r.discrepancies;
    j["notes"] = r.notes;
    return j;
}

std::string flips_text(const CaseTemplate& t, std::uint32_t flips) {
    std::string out;
    for (std::size_t e = 0; e < t.dashed.size(); ++e) {
        std::size_t i = t.dashed[e].i, j = t.dashed[e].j;
        if ((flips >> e) & 1u) std::swap(i, j);
        out += (out.empty() ? "" : " ") + std::string("a") + one(i) + one(j);
    }
    return out;
}

int cmd_classify(const Options& o) {
    std::vector<const CaseTemplate*> chosen;
    if (o.cases.empty()) {
        for (const auto& c : builtin_cases()) chosen.push_back(&c);
    } else {
        for (const auto& name : o.cases) {
            const CaseTemplate* c = find_case(name);
            if (c == nullptr) throw std::invalid_argument("unknown case '" + name + "'");
            chosen.push_back(c);
        }
    }
    for (auto s : o.seeds)
        if (s < 0) throw std::invalid_argument("seeds must be non-negative, got " + std::to_string(s));

    const auto reports = parallel_map(chosen.size(), [&](std::size_t c) {
        return verify_case(*chosen[c], o.seeds, {o.literal_table});
    });
    std::vector<OrientationSearch> orient;
    if (o.orientations)
        orient = parallel_map(chosen.size(), [&](std::size_t c) {
            return resolve_orientation(*chosen[c], o.seeds.front(), o.literal_table);
        });

    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass() ? 1 : 0;

    if (o.json) {
        ordered_json j;
        j["seeds"] = o.seeds;
        j["literal_table"] = o.literal_table;
        j["cases"] = ordered_json::array();
        for (std::size_t c = 0; c < reports.size(); ++c) {
            ordered_json rj = report_json(reports[c]);
            if (o.orientations) {
                rj["orientations"] = {{"total", 1u << orient[c].edges},
                                      {"matching", orient[c].matching.size()},
                                      {"frozen_matches", orient[c].frozen_matches()}};
            }
            j["cases"].push_back(rj);
        }
        j["passed"] = passed;
        j["total"] = reports.size();
        emit(j);
    } else {
        for (std::size_t c = 0; c < reports.size(); ++c) {
            const auto& r = reports[c];
            std::cout << r.name << " " << (r.pass() ? "PASS" : "FAIL") << " dim " << r.computed_dim << " expected "
                      << r.expected_dim << " rule_gap " << r.rule_gap << '\n';
            std::cout << "  claim: " << r.claim << '\n';
            std::cout << "  instantiation: " << assignment_text(r.instantiation) << '\n';
            std::cout << "  seeds:";
            for (const auto& s : r.seeds)
                std::cout << " " << s.seed << ":" << s.computed_dim << (s.subspace_match ? "" : "*");
            std::cout << '\n';
            if (o.orientations) {
                std::cout << "  orientations: " << orient[c].matching.size() << "/" << (1u << orient[c].edges)
                          << " match, frozen " << (orient[c].frozen_matches() ? "matches" : "does not match")
                          << '\n';
                std::cout << "  frozen: " << flips_text(*chosen[c], 0) << '\n';
            }
            for (const auto& d : r.discrepancies) std::cout << "  ! " << d << '\n';
            for (const auto& n : r.notes) std::cout << "  - " << n << '\n';
        }
        std::cout << "summary " << passed << "/" << reports.size() << " PASS\n";
    }
    return passed == reports.size() ? kOk : kVerificationFailure;
}

std::string pattern_text(std::uint64_t mask, std::size_t n) {
    std::string out;
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++s)
            if ((mask >> s) & 1u) out += (out.empty() ? "" : ",") + ("{" + one(i) + "," + one(j) + "}");
    return out.empty() ? "-" : out;
}

int cmd_census(const Options& o) {
    const auto classes = enumerate_patterns(o.census_n);
    if (o.json) {
        ordered_json j;
        j["n"] = o.census_n;
        j["classes"] = ordered_json::array();
        for (const auto& c : classes)
            j["classes"].push_back({{"dashed", pattern_text(c.mask, o.census_n)},
                                    {"dashed_count", c.dashed},
                                    {"labelings", c.representatives},
                                    {"generic_dim", c.generic_dim},
                                    {"cases", c.cases}});
        j["count"] = classes.size();
        emit(j);
        return kOk;
    }
    std::cout << "classes " << classes.size() << '\n';
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& pc = classes[c];
        std::cout << c + 1 << " dashed " << pattern_text(pc.mask, o.census_n) << " labelings " << pc.representatives
                  << " dim " << pc.generic_dim;
        if (!pc.cases.empty()) {
            std::cout << " cases";
            for (const auto& name : pc.cases) std::cout << " " << name;
        }
        std::cout << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivations of Lotka-Volterra algebras in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Structured JSON output");
    app.add_option("--input-format", o.input_format, "Algebra file format")
        ->check(CLI::IsMember({"auto", "matrix", "graph"}));

    auto* derive = app.add_subcommand("derive", "Compute a basis of Der(A)");
    derive->add_option("file", o.file, "Structure matrix or weight graph")->required();
    derive->add_option("--out-dir", o.out_dir, "Also write each basis map to DIR/map_NNN.txt");

    auto* check = app.add_subcommand("check", "Decide whether a linear map is a derivation");
    check->add_option("algebra", o.file, "Structure matrix or weight graph")->required();
    check->add_option("map", o.map_file, "Linear map, column k = image of e_k")->required();

    auto* graph = app.add_subcommand("graph", "Weight graph, support sets and canonical form");
    graph->add_option("file", o.file)->required();

    auto* rules = app.add_subcommand("rules", "Structural constraints on derivations");
    rules->add_option("file", o.file)->required();
    rules->add_flag("--explain", o.explain, "List every constraint with the rule that produced it");

    auto* classify = app.add_subcommand("classify", "Verify the five-dimensional cases M1..M22");
    classify->add_option("--seeds", o.seeds, "Instantiation seeds")->delimiter(',');
    classify->add_flag("--literal-table", o.literal_table, "Use the table cells read literally");
    classify->add_option("--case", o.cases, "Restrict to these cases")->delimiter(',');
    classify->add_flag("--orientations", o.orientations, "Also search edge orientations");

    auto* census = app.add_subcommand("census", "Solid/dashed patterns up to isomorphism");
    census->add_option("--n", o.census_n, "Number of vertices")->check(CLI::Range(1, 5));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*derive) return cmd_derive(o);
        if (*check) return cmd_check(o);
        if (*graph) return cmd_graph(o);
        if (*rules) return cmd_rules(o);
        if (*classify) return cmd_classify(o);
        if (*census) return cmd_census(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid structure matrix: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kInputError;
}
