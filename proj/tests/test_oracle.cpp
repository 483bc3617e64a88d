#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "zetagraph/graphzeta.hpp"
#include "zetagraph/oracle.hpp"

using namespace zetagraph;

namespace {

std::vector<std::vector<Int>> mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Int>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

}  // namespace

TEST_CASE("kernel sizes via Smith normal form") {
    CHECK(kernel_size(mat({{2}}), 2, 2) == 2);               // {0,2} in Z/4
    CHECK(kernel_size(mat({{0, 0}, {0, 0}}), 3, 2) == 81);   // zero 2x2 over Z/9
    CHECK(kernel_size(mat({{1, 0}, {0, 1}}), 5, 3) == 1);    // identity
    CHECK(kernel_size(mat({{2, 4}, {4, 8}}), 2, 2) == 8);    // rank 1, divisor 2
    CHECK(kernel_size(mat({{6}}), 3, 2) == 3);
    CHECK(kernel_size(mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), 2, 1) == 2);
    // non-square shapes
    CHECK(kernel_size(mat({{1, 1}}), 2, 1) == 1);
    CHECK(kernel_size(mat({{1}, {1}}), 2, 1) == 2);
}

TEST_CASE("elementary divisors") {
    auto d = elementary_divisors(mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 2);
    CHECK(d[1] == 2);
    CHECK((d[2] % d[1]) == 0);
    // product of divisors = |det| for the full-rank case
    CHECK(d[0] * d[1] * d[2] == 624);
    CHECK(elementary_divisors(mat({{0}})).empty());
}

TEST_CASE("ask_bruteforce examples") {
    CHECK(ask_bruteforce(ModuleSpec::incidence(block_hypergraph(1, 1)), FinRing(2, 1)) ==
          Rational(3, 2));
    CHECK(ask_bruteforce(ModuleSpec::adj_minus(complete_graph(2)), FinRing(2, 2)) ==
          Rational(11, 2));
    CHECK(ask_bruteforce(ModuleSpec::adj_plus(complete_graph(3)), FinRing(3, 1)) ==
          Rational(89, 27));
    // g(X) = 5 - 6X^{-1} + 3X^{-2} - X^{-3} at X = 3
    LaurentPoly g;
    g.add_term(0, 5);
    g.add_term(-1, -6);
    g.add_term(-2, 3);
    g.add_term(-3, -1);
    CHECK(g.eval(3) == Rational(89, 27));

    // zero-ring convention
    CHECK(ask_bruteforce(ModuleSpec::incidence(block_hypergraph(2, 2)), FinRing(7, 0)) == 1);
    // errors
    CHECK_THROWS_AS(ask_bruteforce(ModuleSpec::adj_plus(complete_graph(3)), FinRing(2, 1)),
                    EvenCharForSymmetric);
    CHECK_THROWS_AS(
        ask_bruteforce(ModuleSpec::incidence(block_hypergraph(4, 4)), FinRing(2, 3), 1000),
        BudgetExceeded);
}

TEST_CASE("characteristic two really does break the symmetric count") {
    // over F_2 the three symmetric off-diagonal parameters of K3 average to
    // 1 + X - X^{-2} at X = 2 (hand-enumerated; re-derived over GF(4) too),
    // which differs from g(2)
    std::vector<std::vector<Int>> m(3, std::vector<Int>(3, 0));
    Int total = 0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                m[0][1] = m[1][0] = x;
                m[0][2] = m[2][0] = y;
                m[1][2] = m[2][1] = z;
                total += kernel_size(m, 2, 1);
            }
    CHECK(Rational(total, 8) == Rational(11, 4));
    LaurentPoly g;
    g.add_term(0, 5);
    g.add_term(-1, -6);
    g.add_term(-2, 3);
    g.add_term(-3, -1);
    CHECK(g.eval(2) != Rational(11, 4));
}

TEST_CASE("vector-side enumeration agrees with the literal one") {
    std::vector<ModuleSpec> specs;
    specs.push_back(ModuleSpec::incidence(block_hypergraph(2, 1)));
    specs.push_back(ModuleSpec::incidence(staircase_hypergraph({0, 1, 1})));
    specs.push_back(ModuleSpec::adj_minus(path_graph(3)));
    specs.push_back(ModuleSpec::adj_minus(cycle_graph(4)));
    specs.push_back(ModuleSpec::adj_plus(path_graph(3)));
    for (const auto& spec : specs)
        for (long long k = 1; k <= 2; ++k) {
            for (Int p : {Int(2), Int(3)}) {
                if (spec.kind() == ModuleSpec::Kind::adj_plus && p == 2) continue;
                FinRing ring(p, k);
                CHECK(ask_bruteforce(spec, ring) == ask_vector_side(spec, ring));
            }
        }
}

TEST_CASE("verify_series on the bridge examples") {
    // W_{BH_{2,1}} against its incidence enumeration: values 1, 5/2, 11/2
    ZetaRat w21 = w_master(block_hypergraph(2, 1));
    TSeries s = w21.series(2);
    CHECK(s.coeffs[0].eval(2) == Rational(1));
    CHECK(s.coeffs[1].eval(2) == Rational(5, 2));
    CHECK(s.coeffs[2].eval(2) == Rational(11, 2));
    CHECK(verify_series(w21, ModuleSpec::incidence(block_hypergraph(2, 1)), 2, 2));

    // W^-_{K2} against the antisymmetric enumeration over Z/4
    CHECK(verify_series(w_minus(complete_graph(2)), ModuleSpec::adj_minus(complete_graph(2)), 2, 2));

    // mismatch reporting
    try {
        verify_series(ZetaRat::geo_inverse(2), ModuleSpec::incidence(block_hypergraph(1, 1)), 2, 1);
        FAIL("expected Mismatch");
    } catch (const Mismatch& e) {
        CHECK(e.k == 1);
        CHECK(e.expected == Rational(4));
        CHECK(e.got == Rational(3, 2));
    }
}

TEST_CASE("column permutation invariance of incidence asks") {
    Hypergraph h(3);
    h.add_edge(0b011);
    h.add_edge(0b110);
    h.add_edge(0b101);
    Hypergraph same = h;  // multiplicity model is already permutation invariant;
    // also check a literally reordered incidence matrix
    IncidenceMatrix inc = h.to_incidence();
    for (auto& row : inc.entries) std::rotate(row.begin(), row.begin() + 1, row.end());
    Hypergraph rot = Hypergraph::from_incidence(inc);
    CHECK(ask_bruteforce(ModuleSpec::incidence(same), FinRing(2, 1)) ==
          ask_bruteforce(ModuleSpec::incidence(rot), FinRing(2, 1)));
}

TEST_CASE("conjugacy counting") {
    CHECK(conjugacy_count(complete_graph(2), 2) == 5);
    CHECK(conjugacy_count(complete_graph(3), 2) == 22);
    CHECK(conjugacy_count(discrete_graph(2), 3) == 9);
    // the Baer/ask bridge: two independent computations
    for (const auto& g : testsupport::all_cographs(3)) {
        for (Int p : {Int(2), Int(3)}) {
            Rational ask1 = ask_bruteforce(ModuleSpec::adj_minus(g), FinRing(p, 1));
            Rational expect = rat_pow(Rational(p), g.m()) * ask1;
            CHECK(Rational(conjugacy_count(g, p)) == expect);
        }
    }
    // ... and for one non-cograph
    CHECK(Rational(conjugacy_count(path_graph(4), 2)) ==
          rat_pow(Rational(2), 3) * ask_bruteforce(ModuleSpec::adj_minus(path_graph(4)), FinRing(2, 1)));
    CHECK_THROWS_AS(conjugacy_count(complete_graph(5), 5), BudgetExceeded);
}
