#include <random>

#include "doctest.h"
#include "qdha/errors.hpp"
#include "qdha/kz.hpp"

using namespace qdha;

namespace {

RVec pt(std::initializer_list<Rational> xs) {
    RVec v(xs);
    for (auto& x : v) x.canonicalize();
    return v;
}

}  // namespace

TEST_CASE("rank one gamma section and sigma") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    const auto& F = W.finite();
    OrderFunction om = from_ddaha_H(W, {Rational(1, 2)}, pt({Rational(1, 4)}));
    GammaChoice gc = choose_gamma(om);
    CHECK(gc.gamma == pt({Rational(-1)}));
    KzContext K(om, gc.gamma);
    REQUIRE(K.orbit_size() == 2);
    CHECK(K.section(0) == pt({Rational(-3, 4)}));
    CHECK(K.section(1) == pt({Rational(-5, 4)}));
    for (int i = 0; i < 2; ++i) CHECK(K.Omega().at(i, 0) == 1);
    CHECK(pregamma_element(W, gc.gamma, F.identity()) == W.identity());
    AffElem gs = pregamma_element(W, gc.gamma, F.simple(0));
    CHECK(W.reduced_word(gs) == IVec{1, 0, 1, 0, 1});
    CHECK(W.act_point(gs, K.section(0)) == K.section(1));

    Poly alpha = root_poly(W.roots(), 0);
    RatOperator sig = K.sigma(0, 0);
    REQUIRE(sig.entries().size() == 1);
    CHECK(sig.entries().begin()->second == RatFunc(alpha));
    // The five-letter product is a nonzero multiple of sigma, the same at both weights.
    Rational c[2];
    for (int i = 0; i < 2; ++i) {
        RatOperator t = K.A().word_operator({1, 0, 1, 0, 1}, K.section(i));
        REQUIRE(t.entries().size() == 1);
        RatFunc q = t.entries().begin()->second / K.sigma(0, i).entries().begin()->second;
        REQUIRE(q.is_polynomial());
        REQUIRE(q.as_poly().is_constant());
        c[i] = q.as_poly().constant_term();
        CHECK(c[i] != 0);
        NormalForm nf = K.A().normal_form(K.sigma(0, i));
        REQUIRE(nf.terms.size() == 1);
        CHECK(nf.terms.begin()->first.second == gs);
    }
    CHECK(c[0] == c[1]);
}

TEST_CASE("rank one isomorphism check") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 2)}, pt({Rational(1, 4)}));
    KzContext K(om, choose_gamma(om).gamma);
    IsoReport rep = iso_check(K, 2, 3);
    CHECK(rep.discrepancies.empty());
    CHECK(rep.products_checked == 2 * (3 + 9 + 27));
    REQUIRE(rep.generators.size() == 2);
    for (const auto& g : rep.generators) {
        CHECK(g.degree_single == 1);
        CHECK(g.degree_symmetric == 2);
        CHECK(g.degree_a == g.degree_symmetric);
        CHECK(g.leading_length == 5);
    }
    for (const auto& s : rep.scalars) CHECK(s != 0);
}

TEST_CASE("vanishing order function") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    OrderFunction om(W, pt({Rational(1, 5)}), {});
    GammaChoice gc = choose_gamma(om);
    CHECK(gc.margin == 1);
    CHECK(gamma_admissible(W.roots(), gc.gamma, 1));
    KzContext K(om, gc.gamma);
    for (int i = 0; i < K.orbit_size(); ++i) CHECK(K.Omega().at(i, 0) == 0);
    IsoReport rep = iso_check(K, 2, 3);
    CHECK(rep.discrepancies.empty());
    for (const auto& g : rep.generators) CHECK(g.degree_a == 0);
}

TEST_CASE("A2 isomorphism check") {
    AffineWeyl W(FiniteRootSystem::build("A2"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 3)}, pt({Rational(1, 3), Rational(1, 3)}));
    GammaChoice gc = choose_gamma(om);
    for (int b = 0; b < W.roots().num_positive(); ++b) CHECK(W.roots().eval(b, gc.gamma) <= -gc.margin);
    KzContext K(om, gc.gamma);
    CHECK(K.orbit_size() == 6);
    IsoReport rep = iso_check(K, 1, 2);
    for (const auto& d : rep.discrepancies) MESSAGE(d);
    CHECK(rep.discrepancies.empty());
    for (const auto& g : rep.generators) CHECK(g.degree_a == g.degree_symmetric);
}

TEST_CASE("sigma membership for other orbit shapes") {
    AffineWeyl W(FiniteRootSystem::build("A2"));
    {
        OrderFunction om = from_ddaha_H(W, {Rational(1, 4)}, pt({Rational(1, 4), Rational(1, 2)}));
        KzContext K(om, choose_gamma(om).gamma);
        CHECK(section_is_equivariant(K.Omega()));
        IsoReport rep = iso_check(K, 0, 1);
        for (const auto& d : rep.discrepancies) MESSAGE(d);
        CHECK(rep.discrepancies.empty());
    }
    {
        // The fundamental coweight: every finite reflection fixes ell0 but none fixes lambda0.
        OrderFunction om = from_ddaha_H(W, {Rational(1, 4)}, pt({Rational(2, 3), Rational(1, 3)}));
        KzContext K(om, choose_gamma(om).gamma);
        CHECK(K.orbit_size() == 1);
        CHECK(!section_is_equivariant(K.Omega()));
        IsoReport rep = iso_check(K, 0, 1);
        REQUIRE(!rep.discrepancies.empty());
        CHECK(rep.discrepancies.front() == "the gamma-section is not equivariant");
    }
}

TEST_CASE("product formula") {
    AffineWeyl W1(FiniteRootSystem::build("A1"));
    OrderFunction om1 = from_ddaha_H(W1, {Rational(1, 2)}, pt({Rational(1, 4)}));
    KzContext K1(om1, choose_gamma(om1).gamma);
    ProductFormula e = product_formula_check(K1, W1.finite().identity(), 0);
    CHECK(e.ok);
    CHECK(e.epsilon == 1);
    Poly alpha = root_poly(W1.roots(), 0);
    for (int i = 0; i < 2; ++i) {
        ProductFormula p = product_formula_check(K1, W1.finite().simple(0), i);
        CHECK(p.ok);
        CHECK(p.rhs == RatFunc(-alpha));
    }
    AffineWeyl W(FiniteRootSystem::build("A2"));
    for (RVec l0 : {pt({Rational(1, 3), Rational(1, 3)}), pt({Rational(1, 4), Rational(1, 2)})}) {
        OrderFunction om = from_ddaha_H(W, {Rational(1, 3)}, l0);
        KzContext K(om, choose_gamma(om).gamma);
        for (int i = 0; i < K.orbit_size(); ++i)
            for (int w = 0; w < W.finite().size(); ++w) {
                ProductFormula p = product_formula_check(K, w, i);
                CHECK(p.ok);
            }
    }
    CHECK(is_signed_power_of_two(Rational(-4)));
    CHECK(is_signed_power_of_two(Rational(1, 8)));
    CHECK(!is_signed_power_of_two(Rational(3)));
    CHECK(!is_signed_power_of_two(Rational(0)));
}

TEST_CASE("gamma change") {
    AffineWeyl W1(FiniteRootSystem::build("A1"));
    OrderFunction om1 = from_ddaha_H(W1, {Rational(1, 2)}, pt({Rational(1, 4)}));
    {
        KzContext K(om1, pt({Rational(-1)}));
        CHECK(gamma_intertwiner(K, K) == K.idempotent());
    }
    GammaChangeReport r1 = gamma_change(om1, pt({Rational(-1)}), pt({Rational(-2)}));
    for (const auto& f : r1.failures) MESSAGE(f);
    CHECK(r1.ok());
    CHECK(r1.checks > 0);
    AffineWeyl W(FiniteRootSystem::build("A2"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 3)}, pt({Rational(1, 3), Rational(1, 3)}));
    RVec g = choose_gamma(om).gamma;
    GammaChangeReport r2 = gamma_change(om, g, scale(Rational(2), g));
    for (const auto& f : r2.failures) MESSAGE(f);
    CHECK(r2.ok());
}

TEST_CASE("skewed gamma and the length inequality") {
    for (const char* label : {"A2", "C2"}) {
        AffineWeyl W(FiniteRootSystem::build(label));
        std::mt19937 rng(3);
        OrderFunction om = random_order_function(W, pt({Rational(1, 5), Rational(1, 7)}), rng, 1, {0, 1, 2});
        for (int l = 0; l < W.rank(); ++l) {
            RVec g = skewed_gamma(om, l, 20);
            CHECK(gamma_admissible(W.roots(), g, om.max_level() + 1));
            CHECK(W.roots().coroot_lattice().contains(g));
            CHECK(length_inequality(W, g, l));
            KzContext K(om, g);
            IsoReport rep = iso_check(K, 0, 1);
            CHECK(rep.discrepancies.empty());
        }
    }
}

TEST_CASE("growth exponents and the kernel criterion in rank one") {
    AffineWeyl W(FiniteRootSystem::build("A1"));
    OrderFunction om = from_ddaha_H(W, {Rational(1, 2)}, pt({Rational(1, 4)}));
    ClanDecomposition D = enumerate_clans(om, 4);
    RVec gamma = choose_gamma(om).gamma;
    std::map<std::string, int> idx;
    for (int c = 0; c < 3; ++c) idx[clan_label(W, D, c)] = c;
    struct Case {
        IVec clans;
        int exponent;
        bool kernel;
    };
    std::vector<Case> cases = {{{idx["C0"]}, 0, true},
                               {{idx["C+"]}, 1, false},
                               {{idx["C-"]}, 1, false},
                               {{0, 1, 2}, 1, false}};
    for (const auto& c : cases) {
        Character ch = clan_character(D, om, c.clans);
        KernelReport k = kernel_clan_test(om, D, gamma, ch, 200);
        CHECK(k.growth.exponent == c.exponent);
        CHECK(std::abs(k.growth.slope - c.exponent) < 0.1);
        CHECK(k.in_kernel == c.kernel);
        CHECK(k.consistent);
    }
    KernelReport z = kernel_clan_test(om, D, gamma, [](const RVec&) { return 0L; }, 50);
    CHECK(z.in_kernel);
    CHECK(z.consistent);
    CHECK(z.growth.exponent == -1);
    // Not clan-constant.
    CHECK_THROWS_AS(kernel_clan_test(om, D, gamma, [](const RVec& l) { return l[0] > 2 ? 1L : 0L; }, 20),
                    UsageError);
}

TEST_CASE("projective growth in rank two") {
    AffineWeyl W(FiniteRootSystem::build("A2"));
    OrderFunction om(W, pt({Rational(1, 5), Rational(1, 7)}), {});
    GrowthReport g = gk_growth(om, [](const RVec&) { return 1L; }, 40);
    CHECK(g.exponent == 2);
    CHECK(std::abs(g.slope - 2) < 0.2);
}
