#pragma once

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fixtures_data.hpp"
#include "graphzeta.hpp"
#include "oracle.hpp"
#include "zetacore.hpp"

namespace zetagraph {

/// Graphs behind the fixture ids. Vertex labellings are the natural ones;
/// every check below is isomorphism-invariant.
inline std::optional<SimpleGraph> fixture_graph(const std::string& id) {
    auto from_edges = [](int n, std::initializer_list<std::pair<int, int>> edges) {
        SimpleGraph g(n);
        for (auto [i, j] : edges) g.add_edge(i, j);
        return g;
    };
    std::string base = id;
    if (base.size() > 5 && base.substr(base.size() - 5) == ".plus") base = base.substr(0, base.size() - 5);

    if (base == "table1.K1") return discrete_graph(1);
    if (base == "table1.D2") return discrete_graph(2);
    if (base == "table1.K2") return complete_graph(2);
    if (base == "table1.D3") return discrete_graph(3);
    if (base == "table1.K2uK1") return from_edges(3, {{0, 1}});
    if (base == "table1.P3") return path_graph(3);
    if (base == "table1.K3") return complete_graph(3);
    if (base == "table1.D4") return discrete_graph(4);
    if (base == "table1.K2uD2") return from_edges(4, {{0, 1}});
    if (base == "table1.K2uK2") return from_edges(4, {{0, 1}, {2, 3}});
    if (base == "table1.P3uK1") return from_edges(4, {{0, 1}, {1, 2}});
    if (base == "table1.P4") return path_graph(4);
    if (base == "table1.C4") return cycle_graph(4);
    if (base == "table1.diamond") return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {0, 3}});
    if (base == "table1.K3uK1") return from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    if (base == "table1.paw") return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    if (base == "table1.S4") return star_graph(4);
    if (base == "table1.K4") return complete_graph(4);

    if (base == "table2.S5") return star_graph(5);
    if (base == "table2.P3uK2") return from_edges(5, {{0, 3}, {0, 4}, {1, 2}});
    if (base == "table2.cricket") return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
    if (base == "table2.P5") return path_graph(5);
    if (base == "table2.dart") return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}});
    if (base == "table2.K23") return from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    if (base == "table2.book3")
        return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    if (base == "table2.K3uK2") return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    if (base == "table2.lollipop")
        return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}});
    if (base == "table2.butterfly")
        return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 3}});
    if (base == "table2.C5") return cycle_graph(5);
    if (base == "table2.K23e")
        return from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
    if (base == "table2.K2vK2uK1")
        return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
    if (base == "table2.W4")
        return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    if (base == "table2.K5e")
        return from_edges(5,
                          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    if (base == "table2.K5") return complete_graph(5);

    if (base.rfind("table3.P", 0) == 0) return path_graph(std::stoi(base.substr(8)));
    if (base.rfind("table4.C", 0) == 0) return cycle_graph(std::stoi(base.substr(8)));

    if (base == "eq.ninja")
        return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {0, 5}, {1, 4}});
    if (base == "eq.H332") {
        SimpleGraph g(8);
        for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}})
            g.add_edge(i, j);
        for (int c = 6; c <= 7; ++c)
            for (int v = 0; v <= 5; ++v) g.add_edge(c, v);
        return g;
    }
    return std::nullopt;
}

inline std::optional<Hypergraph> fixture_hypergraph(const std::string& id) {
    if (id == "eq.H332") {
        Hypergraph h(8);
        h.add_edge(0xFF, 2);
        h.add_edge(0x1F, 2);
        h.add_edge(0xE3, 2);
        h.add_edge(0x03, 1);
        return h;
    }
    return std::nullopt;
}

/// Loads and enriches the embedded fixtures: cograph/kite flags come from
/// the recognisers run on the catalogued graphs.
inline std::vector<Fixture> load_fixtures() {
    std::vector<Fixture> all = parse_fixtures(kFixtureData);
    for (auto& f : all) {
        if (auto g = fixture_graph(f.id)) {
            f.cograph = is_cograph(*g);
            if (f.cograph) {
                try {
                    f.kite = kite_parse(*g);
                } catch (const NotKite&) {
                }
            }
        }
    }
    return all;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(static_cast<size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) perm[static_cast<size_t>(i)] = i;
    do {
        bool match = true;
        for (int i = 0; i < a.n() && match; ++i)
            for (int j = i + 1; j < a.n() && match; ++j)
                if (a.adjacent(i, j) !=
                    b.adjacent(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Reference value for a non-cograph: the embedded fixture whose graph is
/// isomorphic to g, if any.
inline std::optional<ZetaRat> fixture_value_for(const SimpleGraph& g) {
    for (const auto& f : parse_fixtures(kFixtureData)) {
        if (f.kind != Fixture::Kind::w_minus) continue;
        auto fg = fixture_graph(f.id);
        if (fg && isomorphic(*fg, g)) return f.value;
    }
    return std::nullopt;
}

struct SuiteReport {
    int exact = 0;     // fixtures reproduced by the pipeline, exactly
    int oracled = 0;   // fixtures verified against the enumeration only
    int failed = 0;
    std::vector<std::string> notes;
};

/// Runs one fixture: pipeline recomputation for cograph rows, oracle
/// agreement for everything, invariant checks throughout.
inline bool check_fixture(const Fixture& f, SuiteReport& report, std::ostream& out,
                          long long budget) {
    auto fail = [&](const std::string& why) {
        ++report.failed;
        out << "FAIL " << f.id << ": " << why << "\n";
        return false;
    };
    try {
        if (!funceq_check(f.value, f.n)) return fail("functional equation violated");
        if (!reduced_zeta_check(f.value, 10)) return fail("reduced zeta check violated");

        if (f.kind == Fixture::Kind::w_hyper) {
            auto h = fixture_hypergraph(f.id);
            if (!h) return fail("no hypergraph behind this id");
            if (!(w_master(*h) == f.value)) return fail("weak-order sum disagrees");
            verify_series(f.value, ModuleSpec::incidence(*h), 2, 1, budget);
            verify_series(f.value, ModuleSpec::incidence(*h), 3, 1, budget);
            ++report.exact;
            out << "ok   " << f.id << " (hypergraph pipeline + oracle)\n";
            return true;
        }

        auto g = fixture_graph(f.id);
        if (!g) return fail("no graph behind this id");

        if (f.kind == Fixture::Kind::w_plus) {
            // symmetric side: no pipeline in scope; oracle at odd p only
            verify_series(f.value, ModuleSpec::adj_plus(*g), 3, 1, budget);
            ++report.oracled;
            out << "ok   " << f.id << " (oracle p=3)\n";
            return true;
        }

        if (f.cograph) {
            if (!(w_minus(*g) == f.value)) return fail("model pipeline disagrees");
            verify_series(f.value, ModuleSpec::adj_minus(*g), 2, 1, budget);
            ++report.exact;
            out << "ok   " << f.id << " (pipeline exact + oracle p=2)\n";
        } else {
            verify_series(f.value, ModuleSpec::adj_minus(*g), 2, 1, budget);
            Int assignments3 = int_pow(3, static_cast<unsigned long>(g->m()));
            if (assignments3 <= budget) verify_series(f.value, ModuleSpec::adj_minus(*g), 3, 1, budget);
            ++report.oracled;
            out << "ok   " << f.id << " (oracle p=2"
                << (assignments3 <= budget ? ",3" : "") << ")\n";
        }
        return true;
    } catch (const Mismatch& e) {
        return fail(e.what());
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

/// suite: "table1" | "table2" | "table3" | "table4" | "all"
inline SuiteReport run_fixture_suite(const std::string& suite, std::ostream& out,
                                     long long budget = kDefaultBudget) {
    SuiteReport report;
    auto fixtures = load_fixtures();
    for (const auto& f : fixtures) {
        bool selected = (suite == "all") || (f.id.rfind(suite + ".", 0) == 0);
        if (!selected) continue;
        check_fixture(f, report, out, budget);
    }
    if (suite == "table1" || suite == "all") {
        report.notes.push_back(
            "note: the symmetric-side value of the 8-vertex join example is excluded: "
            "its oracle check needs 3^19 enumerations at p=3, over the budget");
    }
    if (suite == "table2" || suite == "all") {
        report.notes.push_back(
            "note: table2 carries 16 of the 23 five-vertex rows; closed forms for the "
            "remaining 7 (chair, bull, banner, tadpole, diamond-with-tail, house, gem) "
            "are not computable in scope and are not embedded");
    }
    for (const auto& n : report.notes) out << n << "\n";
    out << "summary: " << report.exact << " exact, " << report.oracled << " oracle-verified, "
        << report.failed << " failed\n";
    return report;
}

}  // namespace zetagraph
