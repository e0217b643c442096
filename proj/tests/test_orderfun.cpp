#include <random>

#include "doctest.h"
#include "qdha/errors.hpp"
#include "qdha/orderfun.hpp"

using namespace qdha;

namespace {

Rational rq(std::mt19937& rng, int num_range, int den_max) {
    Rational q(static_cast<int>(rng() % (2 * num_range + 1)) - num_range, 1 + static_cast<int>(rng() % den_max));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("rank one running example from dDAHA parameters") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 2)}, {Rational(1, 4)});
    std::map<AffineRoot, int> expect = {{W.affine().simple(0), 1}, {W.affine().simple(1), 1}};
    CHECK(om.support() == expect);
    RVec l0 = {Rational(1, 4)};
    CHECK(om.at(l0, W.affine().simple(1)) == 1);
    CHECK(om.at(l0, W.affine().simple(0)) == 1);
    for (const auto& a : W.affine().positive_window(3))
        if (!(a == W.affine().simple(0)) && !(a == W.affine().simple(1))) CHECK(om.at(l0, a) == 0);
    CHECK(om.tau_degree(1, l0) == 1);
    CHECK(om.tau_degree(0, l0) == 1);
    CHECK_THROWS_AS(om.at({Rational(1, 3)}, W.affine().simple(1)), InvalidParameter);
}

TEST_CASE("zero parameters give the zero family") {
    AffineWeyl W(FiniteRootSystem::build("A2"));
    OrderFunction om = from_ddaha_H(W, {Rational(0)}, {Rational(0), Rational(0)});
    CHECK(om.support().empty());
    CHECK(om.tau_degree(1, {Rational(0), Rational(0)}) == 0);
}

TEST_CASE("order of vanishing oracle on random parameters") {
    std::mt19937 rng(10);
    for (const char* label : {"A1", "A2", "C2"}) {
        AffineWeyl W(FiniteRootSystem::build(label));
        const auto& R = W.roots();
        IVec cls = norm_classes(R);
        for (int t = 0; t < 30; ++t) {
            RVec h(num_norm_classes(R));
            for (auto& x : h) x = rq(rng, 4, 4);
            RVec l0(R.rank());
            for (auto& x : l0) x = rq(rng, 4, 4);
            OrderFunction om = from_ddaha_H(W, h, l0);
            for (int b = 0; b < R.num_roots(); ++b)
                for (long k = -8; k <= 8; ++k) {
                    AffineRoot a{b, k};
                    Rational z = W.affine().eval(a, l0);
                    const Rational& ha = h[cls[b]];
                    int expect = (z == 0 && ha != 0) ? -1 : ((z == ha && ha != 0) ? 1 : 0);
                    CHECK(om.tilde(a) == expect);
                }
        }
    }
}

TEST_CASE("window too small is reported") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    CHECK_THROWS_AS(from_ddaha_H(W, {Rational(1, 2)}, {Rational(1, 4)}, 1), WindowTooSmall);
}

TEST_CASE("validation rejects invalid families") {
    AffineWeyl W(FiniteRootSystem::build("A2"));
    RVec l0 = {Rational(1, 7), Rational(2, 7)};
    CHECK_THROWS_AS(OrderFunction(W, l0, {{{0, 0}, -1}}), InvalidParameter);
    CHECK_THROWS_AS(OrderFunction(W, l0, {{{0, 0}, -2}}), InvalidParameter);
    // At the origin, invariance under W_R is required.
    RVec zero = {Rational(0), Rational(0)};
    CHECK_THROWS_AS(OrderFunction(W, zero, {{{0, 1}, 1}}), InvalidParameter);
    std::map<AffineRoot, int> inv;
    for (int b = 0; b < W.roots().num_roots(); ++b) inv[{b, 1}] = 1;
    CHECK_NOTHROW(OrderFunction(W, zero, inv));
    CHECK_NOTHROW(OrderFunction(W, zero, {{{0, 0}, -1}, {{1, 0}, -1}, {{2, 0}, -1}, {{3, 0}, -1}, {{4, 0}, -1}, {{5, 0}, -1}}));
}

TEST_CASE("values do not depend on the witness") {
    AffineWeyl W(FiniteRootSystem::build("A2"));
    const auto& R = W.roots();
    std::mt19937 rng(12);
    // A point on the wall of the first simple root: stabiliser of order 2.
    RVec l0 = solve({{2, -1}, {-1, 2}}, {Rational(0), Rational(1, 3)});
    std::map<AffineRoot, int> sup;
    for (int t = 0; t < 6; ++t) {
        AffineRoot a{static_cast<int>(rng() % R.num_roots()), static_cast<long>(rng() % 3) - 1};
        int v = 1 + static_cast<int>(rng() % 2);
        for (const auto& g : W.stabilizer(l0)) sup[W.act_root(g, a)] = v;
    }
    OrderFunction om(W, l0, sup);
    auto stab = W.stabilizer(l0);
    CHECK(stab.size() == 2);
    int checked = 0;
    for (const auto& p : W.orbit_window(l0, 6)) {
        for (const auto& s : stab) {
            AffElem g2 = W.compose(p.witness, s);
            for (int t = 0; t < 5; ++t) {
                AffineRoot a{static_cast<int>(rng() % R.num_roots()), static_cast<long>(rng() % 7) - 3};
                CHECK(om.at_with(g2, a) == om.at_with(p.witness, a));
                CHECK(om.at(p.point, a) == om.at_with(p.witness, a));
                ++checked;
            }
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("tau degrees on walls") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 2)}, {Rational(0)});
    CHECK(om.tau_degree(1, {Rational(0)}) == -2);
}

TEST_CASE("congruence extraction on the B side") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    BOrderFunction K = from_ddaha_K(W, {Rational(1, 2)}, {Rational(1, 4)});
    CHECK(K.orbit_size() == 2);
    CHECK(K.at(0, 0) == 1);
    CHECK(K.at(1, 0) == 1);
    BOrderFunction generic = from_ddaha_K(W, {Rational(1, 3)}, {Rational(1, 7)});
    CHECK(generic.at(0, 0) == 0);
    BOrderFunction pole = from_ddaha_K(W, {Rational(1, 3)}, {Rational(0)});
    CHECK(pole.orbit_size() == 1);
    CHECK(pole.at(0, 0) == -1);
    validate_b_order_function(K);
    validate_b_order_function(pole);
}

TEST_CASE("integral of the running example") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 2)}, {Rational(1, 4)});
    GammaChoice g = choose_gamma(om);
    CHECK(g.margin == 2);
    CHECK(g.gamma == RVec{Rational(-1)});
    BOrderFunction Om = integral(om, g.gamma);
    CHECK(pregamma_point(Om, g.gamma, 0) == RVec{Rational(-3, 4)});
    CHECK(pregamma_point(Om, g.gamma, 1) == RVec{Rational(-5, 4)});
    CHECK(Om.at(0, 0) == 1);
    CHECK(Om.at(1, 0) == 1);
    OrderFunction zero(W, {Rational(1, 4)}, {});
    BOrderFunction Z = integral(zero, choose_gamma(zero).gamma);
    CHECK(Z.at(0, 0) == 0);
}

TEST_CASE("integral of the H family equals the K family") {
    std::mt19937 rng(13);
    for (const char* label : {"A1", "A2", "C2", "BC1", "BC2"}) {
        std::string l(label);
        FiniteRootSystem R0 = l.rfind("BC", 0) == 0 ? FiniteRootSystem::synthetic_bc(l[2] - '0') : FiniteRootSystem::build(label);
        AffineWeyl W(R0);
        const auto& R = W.roots();
        for (int t = 0; t < 25; ++t) {
            RVec h(num_norm_classes(R));
            for (auto& x : h) x = rq(rng, 3, 4);
            RVec l0(R.rank());
            for (auto& x : l0) x = rq(rng, 4, 4);
            OrderFunction om = from_ddaha_H(W, h, l0);
            GammaChoice g = choose_gamma(om);
            CHECK(gamma_admissible(R, g.gamma, g.margin));
            BOrderFunction I1 = integral(om, g.gamma);
            BOrderFunction I2 = integral(om, scale(Rational(2), g.gamma));
            BOrderFunction K = from_ddaha_K(W, h, l0);
            CHECK(I1.values() == K.values());
            CHECK(I2.values() == K.values());
            validate_b_order_function(K);
        }
    }
}
