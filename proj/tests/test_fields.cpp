#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ramlift/ff_poly.hpp"

using namespace ramlift;

TEST_CASE("deterministic moduli") {
    auto F5 = FiniteField::make(5, 1);
    CHECK(F5->modulus() == std::vector<long>{0});  // modulus x
    auto F4 = FiniteField::make(2, 2);
    CHECK(F4->modulus() == std::vector<long>{1, 1});  // x^2+x+1
    auto F9 = FiniteField::make(3, 2);
    CHECK(F9->modulus() == std::vector<long>{1, 0});  // x^2+1
    CHECK_THROWS_AS(FiniteField::make(6, 1), bad_input);
}

TEST_CASE("field axioms, spot checks") {
    auto F = FiniteField::make(3, 2);
    Int q = F->order();
    // Frobenius additive on all of F_9
    for (Int i = 0; i < q; ++i)
        for (Int j = 0; j < q; ++j) {
            FFElem a = F->element_by_index(i), b = F->element_by_index(j);
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b) * b == a * (b * b));
        }
    for (Int i = 1; i < q; ++i) {
        FFElem a = F->element_by_index(i);
        CHECK(a * a.inverse() == F->one());
        CHECK(a.pth_root().frobenius() == a);
    }
}

TEST_CASE("poly arithmetic") {
    auto F = FiniteField::make(5, 1);
    FFPoly a = ff_poly(F, Var::t, {{0, 1}, {-1, 1}});   // 1 + t^-1
    FFPoly b = ff_poly(F, Var::t, {{0, 1}, {-1, -1}});  // 1 - t^-1
    FFPoly prod = a * b;
    CHECK(prod == ff_poly(F, Var::t, {{0, 1}, {-2, -1}}));
    // a * 1 = a
    FFPoly one = ff_poly(F, Var::t, {{0, 1}});
    CHECK(a * one == a);
    // full cancellation
    FFPoly c = ff_poly(F, Var::t, {{0, 1}, {-1, 2}});
    FFPoly d = ff_poly(F, Var::t, {{0, 4}, {-1, 3}});
    CHECK((c + d).is_zero());
}

TEST_CASE("derivative") {
    auto F = FiniteField::make(5, 1);
    // d(t^5) = 0
    CHECK(derivative(ff_poly(F, Var::t, {{5, 1}})).is_zero());
    // d(t^-1) = -t^-2 dt
    CHECK(derivative(ff_poly(F, Var::t, {{-1, 1}})).mantissa ==
          ff_poly(F, Var::t, {{-2, -1}}));
    // d(1 + 2 t^-3) = 4 t^-4 dt over F_5
    CHECK(derivative(ff_poly(F, Var::t, {{0, 1}, {-3, 2}})).mantissa ==
          ff_poly(F, Var::t, {{-4, 4}}));
}

TEST_CASE("log_derivative") {
    auto F = FiniteField::make(5, 1);
    // g = 1: zero
    CHECK(log_derivative(ff_poly(F, Var::t, {{0, 1}}), 10).is_zero());
    // g = 1 - 2 t^-1: dg/g = (x t^-2 + x^2 t^-3 + ...) dt with x = 2
    auto ld = log_derivative(ff_poly(F, Var::t, {{0, 1}, {-1, -2}}), 6);
    for (long k = 2; k <= 6; ++k) {
        FFElem expect = F->from_int(2).pow(k - 1);
        CHECK(ld.mantissa.get(-Int(k), F->zero()) == expect);
    }
    // g = t^-3: dg/g = -3 dt/t
    auto ld3 = log_derivative(ff_poly(F, Var::t, {{-3, 1}}), 8);
    CHECK(ld3.mantissa == ff_poly(F, Var::t, {{-1, -3}}));
    CHECK_THROWS_AS(log_derivative(FFPoly(Var::t), 3), bad_input);
}

TEST_CASE("log_derivative multiplicative") {
    auto F = FiniteField::make(3, 2);
    FFPoly g1 = ff_poly(F, Var::t, {{0, 1}, {-1, 1}, {-2, 2}});
    FFPoly g2 = ff_poly(F, Var::t, {{0, 1}, {-3, 2}});
    long tr = 9;
    auto sum = log_derivative(g1, tr) + log_derivative(g2, tr);
    auto prod = log_derivative(g1 * g2, tr);
    CHECK(prod.mantissa.truncate_below(-Int(tr)) == sum.mantissa.truncate_below(-Int(tr)));
}

TEST_CASE("cartier") {
    auto F = FiniteField::make(5, 1);
    // C(dt) = 0
    CHECK(cartier({ff_poly(F, Var::t, {{0, 1}})}).is_zero());
    // C(t^{pk-1} dt) = t^{k-1} dt
    CHECK(cartier({ff_poly(F, Var::t, {{14, 1}})}).mantissa == ff_poly(F, Var::t, {{2, 1}}));
    // p=5, m=1, nu=1: eta = -(t^-2 + t^-6)dt, C(eta) = eta + omega with omega = t^-6 dt
    DiffForm eta{ff_poly(F, Var::t, {{-2, -1}, {-6, -1}})};
    DiffForm omega{ff_poly(F, Var::t, {{-6, 1}})};
    CHECK(cartier(eta) == eta + omega);
}

TEST_CASE("cartier semilinearity on random inputs") {
    auto F = FiniteField::make(3, 2);
    // C(f^p w) = f C(w), C additive, C(dg) = 0
    std::mt19937 rng(7);
    auto rnd_poly = [&](int nterms) {
        FFPoly f(Var::t);
        for (int i = 0; i < nterms; ++i) {
            long e = long(rng() % 9) - 6;
            f.add_term(e, F->element_by_index(rng() % 9));
        }
        return f;
    };
    for (int it = 0; it < 25; ++it) {
        FFPoly f = rnd_poly(3);
        DiffForm w{rnd_poly(4)}, w2{rnd_poly(4)};
        CHECK(cartier(w + w2) == cartier(w) + cartier(w2));
        FFPoly fp(Var::t);
        for (const auto& [e, c] : f.terms()) fp.add_term(e * 3, c.pow(3));
        CHECK(cartier({fp * w.mantissa}) .mantissa == (f * cartier(w).mantissa));
        CHECK(cartier(derivative(rnd_poly(5))).is_zero());
    }
}

TEST_CASE("squarefree_check") {
    auto F5 = FiniteField::make(5, 1);
    FFPoly s = ff_poly(F5, Var::t, {{0, 1}, {-1, -1}});
    CHECK_FALSE(squarefree_check(s * s));
    CHECK(squarefree_check(ff_poly(F5, Var::t, {{0, 1}, {-2, -1}})));
    CHECK_FALSE(squarefree_check(ff_poly(F5, Var::t, {{0, 1}, {-5, -1}})));
}

TEST_CASE("roots_in_extension") {
    auto F3 = FiniteField::make(3, 1);
    // t^-1 (1 - t^-1): root 1 with multiplicity 1
    auto rl = roots_in_extension(ff_poly(F3, Var::t, {{-1, 1}, {-2, -1}}));
    REQUIRE(rl.roots.size() == 1);
    CHECK(rl.roots[0].second == 1);
    CHECK(rl.roots[0].first == rl.field->one());
    // 1 + t^-2 over F_3: two roots in F_9
    auto rl2 = roots_in_extension(ff_poly(F3, Var::t, {{0, 1}, {-2, 1}}));
    CHECK(rl2.field->d() == 2);
    CHECK(rl2.roots.size() == 2);
    // multiplicity counting
    auto F5 = FiniteField::make(5, 1);
    FFPoly g = ff_poly(F5, Var::t, {{0, 1}, {-1, -1}});
    auto rl3 = roots_in_extension(g * g * ff_poly(F5, Var::t, {{0, 1}, {-1, -2}}));
    long total = 0;
    for (auto& [x, m] : rl3.roots) total += m;
    CHECK(total == 3);
    CHECK_THROWS_AS(roots_in_extension(ff_poly(F5, Var::t, {{0, 1}})), bad_input);
}
