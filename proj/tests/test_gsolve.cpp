#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramlift/gsolve.hpp"

using namespace ramlift;

TEST_CASE("worked instance p=5 breaks (1,5,34): N1=19, N2=10") {
    auto prob = make_gproblem(5, 1, 1, 29);
    auto sol = solve_g(prob, false);
    CHECK(sol.N1 == 19);
    CHECK(sol.N2 == 10);
    CHECK(verify_g(sol, prob));
}

TEST_CASE("minimal case p=5, N=20: N1=20, N2=0") {
    auto prob = make_gproblem(5, 1, 1, 20);
    auto sol = solve_g(prob, false);
    CHECK(sol.N1 == 20);
    CHECK(sol.N2 == 0);
    CHECK(verify_g(sol, prob));
}

TEST_CASE("m=2 instance: g(t) = h(t^2)") {
    auto prob = make_gproblem(3, 2, 0, 4);
    auto sol = solve_g(prob);
    CHECK(sol.N1 == 4);
    CHECK(sol.N2 == 0);
    CHECK(verify_g(sol, prob));
    // all exponents divisible by m
    for (const auto& [e, c] : sol.g.terms()) CHECK(e % 2 == 0);
}

TEST_CASE("m does not divide N") {
    auto prob = make_gproblem(3, 2, 0, 5);
    CHECK_THROWS_AS(solve_g(prob), bad_input);
}

TEST_CASE("perturbed solution fails verify") {
    auto prob = make_gproblem(5, 1, 1, 20);
    auto sol = solve_g(prob, false);
    sol.g.add_term(-3, prob.field->one());
    CHECK_FALSE(verify_g(sol, prob));
}

TEST_CASE("linearity in c") {
    auto prob = make_gproblem(5, 1, 1, 20);
    auto sol = solve_g(prob, false);
    GProblem scaled = prob;
    scaled.c = prob.field->from_int(3) * prob.c;
    auto sol2 = solve_g(scaled, false);
    CHECK(sol2.g == sol.g.scale(prob.field->from_int(3)));
    CHECK(verify_g(sol2, scaled));
}

TEST_CASE("recursion coefficients: the conditional-disk table") {
    auto prob = make_gproblem(5, 1, 1, 20);
    auto tbl = recursion_coeffs(prob, 24, true);
    // frozen from the worked example: cbar_0..cbar_20
    std::map<long, long> expect{{0, 1}, {1, 1}, {2, 3}, {3, 1}, {4, 4},  {6, 1},
                                {7, 2}, {8, 1}, {11, 1}, {12, 4}, {16, 1}, {20, 4}};
    for (long i = 0; i <= 24; ++i) {
        auto it = tbl.find(Int(i));
        long got = (it == tbl.end()) ? 0 : it->second.coeffs()[0];
        long want = expect.count(i) ? expect[i] : 0;
        CHECK(got == want);
    }
    // cbar_0 normalization impossible when N2 > 0
    auto prob29 = make_gproblem(5, 1, 1, 29);
    CHECK_THROWS_AS(recursion_coeffs(prob29, 10, true), bad_input);
}

TEST_CASE("thm2 window sweep") {
    for (long p : {2L, 3L, 5L}) {
        for (long nu : {0L, 1L, 2L}) {
            for (long m : {1L, 2L, 3L}) {
                if (m % p == 0) continue;
                for (Int N = m; N <= 200; N += m) {
                    auto prob = make_gproblem(p, m, nu, N);
                    auto sol = solve_g(prob, false);
                    REQUIRE(verify_g(sol, prob));
                    Int pnu = ipow(Int(p), nu), pnu1 = ipow(Int(p), nu + 1);
                    Int lo = m * (pnu1 - pnu - p), hi = m * (pnu1 - pnu);
                    REQUIRE(sol.N1 > lo);
                    REQUIRE(sol.N1 <= hi);
                    REQUIRE((sol.N1 - N) % p == 0);
                    REQUIRE(sol.N2 % p == 0);
                    REQUIRE(sol.N1 % m == 0);
                    REQUIRE(squarefree_check(sol.g));
                }
            }
        }
    }
}

TEST_CASE("determinism") {
    auto prob = make_gproblem(5, 1, 2, 55);
    auto a = solve_g(prob, false), b = solve_g(prob, false);
    CHECK(a.g == b.g);
}

TEST_CASE("residue of dg/g at infinity vanishes") {
    for (long p : {3L, 5L}) {
        auto prob = make_gproblem(p, 1, 1, Int(p * p - p));
        auto sol = solve_g(prob, false);
        auto ld = log_derivative(sol.g, 3);
        CHECK(ld.mantissa.get(-1, prob.field->zero()).is_zero());
    }
}

TEST_CASE("assumption-2 matrix") {
    // minimal-case solution is square and invertible (p=3, m_{n-1}=2)
    auto prob = make_gproblem(3, 2, 0, 4);
    auto sol = solve_g(prob);
    auto a2 = assumption2_matrix(sol, 2, 3);
    CHECK(a2.square);
    CHECK(a2.invertible);
    // single root: A = (1)
    auto prob1 = make_gproblem(5, 1, 0, 1);
    auto sol1 = solve_g(prob1);
    REQUIRE(sol1.N1 == 1);
    auto a1 = assumption2_matrix(sol1, 1, 5);
    CHECK(a1.square);
    CHECK(a1.A.size() == 1);
    CHECK(a1.invertible);
    // p=5 minimal with m_{n-1} = 5: 20 roots in a degree-19 extension field
    auto prob5 = make_gproblem(5, 1, 1, 20);
    auto sol5 = solve_g(prob5);
    CHECK(Int(sol5.roots.size()) == 20);
    auto a5 = assumption2_matrix(sol5, 5, 5);
    CHECK(a5.square);
    CHECK(a5.invertible);
}
