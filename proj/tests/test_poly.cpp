#include <random>

#include "doctest.h"
#include "qdha/errors.hpp"
#include "qdha/poly.hpp"

using namespace qdha;

namespace {

Poly random_poly(std::mt19937& rng, int n, int max_deg, int terms) {
    Poly p(n);
    for (int t = 0; t < terms; ++t) {
        Mono m{};
        int budget = static_cast<int>(rng() % (max_deg + 1));
        for (int k = 0; k < budget; ++k) ++m[rng() % n];
        Rational c(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
        c.canonicalize();
        p += Poly::monomial(n, m, c);
    }
    return p;
}

Poly nonzero_poly(std::mt19937& rng, int n, int max_deg, int terms) {
    Poly p(n);
    while (p.is_zero()) p = random_poly(rng, n, max_deg, terms);
    return p;
}

}  // namespace

TEST_CASE("canonical form and printing") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = x * x - y + y + Rational(3, 2) * x * y - Poly::constant(2, 1);
    CHECK(p.to_string() == "x1^2 + 3/2*x1*x2 - 1");
    CHECK((x - x).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK(p.grade() == 4);
    CHECK(!p.is_homogeneous());
    CHECK(Poly::variable(1, 0).to_string() == "x");
    CHECK((-(y * y) + x).to_string() == "-x2^2 + x1");
    CHECK(p.eval({Rational(1), Rational(2)}) == 3);
}

TEST_CASE("degree is additive under multiplication") {
    std::mt19937 rng(1);
    for (int t = 0; t < 100; ++t) {
        Poly f = nonzero_poly(rng, 3, 4, 4), g = nonzero_poly(rng, 3, 4, 4);
        CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
    }
}

TEST_CASE("gcd against reference values") {
    Poly x1 = Poly::variable(3, 0), x2 = Poly::variable(3, 1), x3 = Poly::variable(3, 2);
    Poly one = Poly::constant(3, 1);
    struct Case {
        Poly f, g, expect;
    };
    std::vector<Case> cases = {
        {(x1 * x1 - x2 * x2) * (x1 + 3 * x2 + one), (x1 - x2) * (x1 + 3 * x2 + one).pow(2),
         x1 * x1 + 2 * x1 * x2 + x1 - 3 * x2 * x2 - x2},
        {(2 * x1 - x2).pow(3) * (x3 + x1), (2 * x1 - x2).pow(2) * (x3 - x1),
         x1 * x1 - x1 * x2 + Rational(1, 4) * x2 * x2},
        {x1.pow(4) - x2.pow(4), x1.pow(3) + x1 * x1 * x2 - x1 * x2 * x2 - x2.pow(3), x1 * x1 - x2 * x2},
        {(x1 * x2 + x3 * x3) * (x1 - 2 * x3), (x1 * x2 + x3 * x3) * (x2 + x3) * (x1 + one), x1 * x2 + x3 * x3},
        {x1 + one, x2, one},
    };
    for (const auto& c : cases) {
        CHECK(gcd(c.f, c.g) == c.expect);
        CHECK(gcd(c.g, c.f) == c.expect);
    }
}

TEST_CASE("gcd of random products recovers the common factor") {
    std::mt19937 rng(2);
    for (int t = 0; t < 60; ++t) {
        Poly a = nonzero_poly(rng, 3, 2, 3), b = nonzero_poly(rng, 3, 2, 3), c = nonzero_poly(rng, 3, 2, 3);
        Poly g = gcd(a * c, b * c);
        Poly q;
        CHECK(divide_exact(g, c, q));
        CHECK(divide_exact(a * c, g, q));
        CHECK(divide_exact(b * c, g, q));
    }
}

TEST_CASE("exact division") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly q;
    CHECK(divide_exact(x * x - y * y, x + y, q));
    CHECK(q == x - y);
    CHECK(!divide_exact(x * x + y, x + y, q));
    CHECK_THROWS_AS(divide_exact(x, Poly(2), q), DivisionByZero);
}

TEST_CASE("rational function field axioms") {
    std::mt19937 rng(3);
    const int n = 2;
    RatFunc one = RatFunc::constant(n, 1);
    for (int t = 0; t < 60; ++t) {
        Poly f = nonzero_poly(rng, n, 3, 3), g = nonzero_poly(rng, n, 3, 3), h = nonzero_poly(rng, n, 2, 3);
        RatFunc a(f, g), b(g, f), c(h, f * g);
        CHECK(a * one == a);
        CHECK((a + (-a)).is_zero());
        CHECK(a * b == one);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * c == c * a);
        CHECK(a / a == one);
        CHECK(a.den().leading().coef == 1);
        RVec pt = {Rational(static_cast<int>(rng() % 7) + 2, 3), Rational(static_cast<int>(rng() % 5) + 5, 7)};
        for (auto& q : pt) q.canonicalize();
        if (g.eval(pt) != 0 && f.eval(pt) != 0 && h.eval(pt) != 0)
            CHECK((a + c).eval(pt) == f.eval(pt) / g.eval(pt) + h.eval(pt) / (f.eval(pt) * g.eval(pt)));
    }
    CHECK_THROWS_AS(RatFunc(Poly::constant(n, 1), Poly(n)), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(n).inverse(), DivisionByZero);
}

TEST_CASE("normalisation cancels common factors") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    RatFunc r((x * x - y * y) * 3, (x + y) * 6);
    CHECK(r.is_polynomial());
    CHECK(r.as_poly() == Rational(1, 2) * (x - y));
    RatFunc s(x, 2 * x * y);
    CHECK(s.num() == Poly::constant(2, Rational(1, 2)));
    CHECK(s.den() == y);
    CHECK(s.to_string() == "(1/2)/(x2)");
}

TEST_CASE("Weyl group action on polynomials") {
    for (const char* label : {"A1", "A2", "C2", "G2"}) {
        AffineWeyl AW(FiniteRootSystem::build(label));
        const auto& W = AW.finite();
        const auto& R = AW.roots();
        const int n = R.rank();
        std::mt19937 rng(4);
        for (int w = 0; w < W.size(); ++w) {
            for (int b = 0; b < R.num_roots(); ++b) CHECK(weyl_act(W, w, root_poly(R, b)) == root_poly(R, W.act(w, b)));
            Poly f = random_poly(rng, n, 3, 4), g = random_poly(rng, n, 3, 4);
            CHECK(weyl_act(W, w, f * g) == weyl_act(W, w, f) * weyl_act(W, w, g));
            CHECK(weyl_act(W, w, f).total_degree() == f.total_degree());
            int v = static_cast<int>(rng() % W.size());
            CHECK(weyl_act(W, W.mul(w, v), f) == weyl_act(W, w, weyl_act(W, v, f)));
        }
        CHECK(weyl_act(W, W.identity(), root_poly(R, 0)) == root_poly(R, 0));
    }
    AffineWeyl A1(FiniteRootSystem::build("A1"));
    Poly x = Poly::variable(1, 0);
    CHECK(weyl_act(A1.finite(), A1.finite().simple(0), x) == -x);
    CHECK(root_poly(A1.roots(), 0) == 2 * x);
}

TEST_CASE("divided differences") {
    AffineWeyl A1(FiniteRootSystem::build("A1"));
    Poly x = Poly::variable(1, 0);
    CHECK(demazure(A1.finite(), 0, x) == Poly::constant(1, -1));
    CHECK(demazure(A1.finite(), 0, x * x).is_zero());
    for (const char* label : {"A2", "C2", "G2"}) {
        AffineWeyl AW(FiniteRootSystem::build(label));
        const auto& W = AW.finite();
        const auto& R = AW.roots();
        std::mt19937 rng(5);
        for (int t = 0; t < 20; ++t) {
            Poly f = random_poly(rng, R.rank(), 4, 5), g = random_poly(rng, R.rank(), 3, 4);
            for (int b = 0; b < R.num_positive(); ++b) {
                int s = W.reflection(b);
                CHECK(demazure(W, b, f * g) == demazure(W, b, f) * g + weyl_act(W, s, f) * demazure(W, b, g));
                CHECK(demazure(W, b, demazure(W, b, f)).is_zero());
                Poly inv = f + weyl_act(W, s, f);
                CHECK(demazure(W, b, inv).is_zero());
            }
        }
    }
}

TEST_CASE("divided differences satisfy braid relations") {
    for (const char* label : {"A2", "C2", "B2", "G2"}) {
        AffineWeyl AW(FiniteRootSystem::build(label));
        const auto& W = AW.finite();
        std::mt19937 rng(6);
        int m = AW.braid_order(1, 2);
        for (int t = 0; t < 10; ++t) {
            Poly f = random_poly(rng, 2, 6, 6);
            Poly p = f, q = f;
            for (int k = 0; k < m; ++k) {
                p = demazure(W, k % 2, p);
                q = demazure(W, 1 - k % 2, q);
            }
            CHECK(p == q);
        }
    }
}
