#include "qdha/verify.hpp"

#include <sstream>

#include "qdha/errors.hpp"
#include "qdha/instance.hpp"

namespace qdha {

nlohmann::json to_json(const Report& r) {
    return {{"check", r.check},       {"instance", r.instance}, {"instances", 1},      {"cases", r.cases},
            {"pass", r.pass()},       {"failures", r.failures}, {"details", r.details}};
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "check     " << r.check << "\n";
    out << "instance  " << r.instance << "\n";
    out << "cases     " << r.cases << "\n";
    out << "result    " << (r.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : r.failures) out << "  failure: " << f << "\n";
    if (!r.details.empty()) out << r.details.dump(2) << "\n";
    return out.str();
}

IVec random_word(std::mt19937& rng, int letters, int max_len) {
    IVec w(rng() % (max_len + 1));
    for (auto& l : w) l = static_cast<int>(rng() % letters);
    return w;
}

RatOperator random_b_element(const BqhaAlgebra& B, std::mt19937& rng, int max_len) {
    RatOperator x(B.nvars());
    for (int t = 0; t < 2; ++t) {
        const RVec& src = B.point(static_cast<int>(rng() % B.omega().orbit_size()));
        RatOperator y = B.word_operator(random_word(rng, B.num_letters(), max_len), src);
        Poly f = Poly::constant(B.nvars(), static_cast<int>(rng() % 5) - 2);
        for (int j = 0; j < B.nvars(); ++j) f += Poly::variable(B.nvars(), j) * Rational(static_cast<int>(rng() % 3));
        x += y.left_multiply(RatFunc(f));
    }
    return x;
}

Report verify_length(const AffineWeyl& W, int ball) {
    Report r;
    r.check = "length";
    for (const auto& g : W.ball(ball)) {
        ++r.cases;
        long inv = W.length_inversions(g);
        if (W.length_formula(g) != inv || W.length_formula_right(g) != inv ||
            static_cast<long>(W.reduced_word(g).size()) != inv)
            r.failures.push_back("X^" + to_string(g.mu) + " w" + std::to_string(g.w));
    }
    r.details["ball"] = ball;
    return r;
}

Report verify_basis(const OrderFunction& omega, int samples, int max_len, std::mt19937& rng) {
    Report r;
    r.check = "basis";
    QdhaAlgebra A(omega);
    const auto window = omega.weyl().orbit_window(omega.base(), 2);
    for (int t = 0; t < samples; ++t) {
        ++r.cases;
        IVec word = random_word(rng, A.num_letters(), max_len);
        const RVec& src = window[rng() % window.size()].point;
        const std::string tag = omega.weyl().word_string(word) + " e(" + to_string(src) + ")";
        try {
            RatOperator x = A.word_operator(word, src);
            if (!(A.reconstruct(A.normal_form(x)) == x)) r.failures.push_back(tag + ": reconstruction differs");
        } catch (const NotInAlgebra& e) {
            r.failures.push_back(tag + ": " + e.what());
        }
    }
    r.details["max_length"] = max_len;
    return r;
}

Report verify_braid(const OrderFunction& omega, int window) {
    Report r;
    r.check = "braid";
    const auto& W = omega.weyl();
    QdhaAlgebra A(omega);
    long worst = kMinusInfinity;
    for (int a = 0; a < W.num_letters(); ++a)
        for (int b = a + 1; b < W.num_letters(); ++b) {
            const int m = W.braid_order(a, b);
            if (m == 0) continue;
            for (const auto& p : W.orbit_window(omega.base(), window)) {
                ++r.cases;
                long d = A.braid_defect(a, b, p.point);
                worst = std::max(worst, d - (m - 1));
                if (d > m - 1)
                    r.failures.push_back("letters " + std::to_string(a) + "," + std::to_string(b) + " at " +
                                         to_string(p.point) + ": defect " + std::to_string(d));
            }
        }
    r.details["window"] = window;
    r.details["worst_excess"] = worst;
    return r;
}

Report verify_filtration(const OrderFunction& omega, int samples, int max_len, std::mt19937& rng) {
    Report r;
    r.check = "filtration";
    QdhaAlgebra A(omega);
    const auto window = omega.weyl().orbit_window(omega.base(), 2);
    for (int t = 0; t < samples; ++t) {
        ++r.cases;
        IVec word = random_word(rng, A.num_letters(), max_len);
        const RVec& src = window[rng() % window.size()].point;
        const std::string tag = omega.weyl().word_string(word) + " e(" + to_string(src) + ")";
        try {
            long d = A.filtration_degree(A.normal_form(A.word_operator(word, src)));
            if (d > static_cast<long>(word.size())) r.failures.push_back(tag + ": degree " + std::to_string(d));
        } catch (const NotInAlgebra& e) {
            r.failures.push_back(tag + ": " + e.what());
        }
    }
    r.details["max_length"] = max_len;
    return r;
}

Report verify_integral(const OrderFunction& omega, const RVec& gamma, const RVec* h) {
    Report r;
    r.check = "integral";
    BOrderFunction Om = integral(omega, gamma);
    BOrderFunction Om2 = integral(omega, scale(Rational(2), gamma));
    ++r.cases;
    if (Om.values() != Om2.values()) r.failures.push_back("integral depends on gamma");
    ++r.cases;
    try {
        validate_b_order_function(Om);
    } catch (const InvalidParameter& e) {
        r.failures.push_back(std::string("integral is not a valid B-side family: ") + e.what());
    }
    if (h) {
        ++r.cases;
        if (from_ddaha_K(omega.weyl(), *h, omega.base()).values() != Om.values())
            r.failures.push_back("integral differs from the K-side order function");
    }
    nlohmann::json table = nlohmann::json::array();
    for (int i = 0; i < Om.orbit_size(); ++i) table.push_back({{"ell", to_string(Om.point(i))}, {"Omega", Om.values()[i]}});
    r.details["Omega"] = table;
    return r;
}

Report verify_iso(const OrderFunction& omega, const RVec& gamma, int degree, int word_bound) {
    Report r;
    r.check = "iso";
    KzContext K(omega, gamma);
    IsoReport rep = iso_check(K, degree, word_bound);
    r.cases = rep.products_checked + static_cast<long>(rep.generators.size() + rep.scalars.size());
    r.failures = rep.discrepancies;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : rep.generators)
        gens.push_back({{"letter", g.letter + 1},
                        {"weight", to_string(K.section(g.source))},
                        {"Omega", g.omega_value},
                        {"degree_single", g.degree_single},
                        {"degree_symmetric", g.degree_symmetric},
                        {"degree_A", g.degree_a},
                        {"leading_length", g.leading_length},
                        {"normal_form", g.normal_form}});
    nlohmann::json scalars = nlohmann::json::array();
    for (const auto& s : rep.scalars) scalars.push_back(to_string(s));
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& s : K.sections()) weights.push_back(to_string(s));
    r.details = {{"gamma", to_string(gamma)}, {"e_gamma", weights},  {"generators", gens},
                 {"scalars", scalars},        {"degree", degree},    {"word_bound", word_bound},
                 {"discrepancies", rep.discrepancies}};
    return r;
}

Report verify_frobenius(const OrderFunction& omega, const RVec& gamma, int degree, int pairs, std::mt19937& rng) {
    Report r;
    r.check = "frobenius";
    BOrderFunction Om = integral(omega, gamma);
    BqhaAlgebra B(Om);
    GramReport g = gram_rank(B, degree, rng);
    ++r.cases;
    if (g.rank != g.expected_rank)
        r.failures.push_back("Gram rank " + std::to_string(g.rank) + " below " + std::to_string(g.expected_rank));
    const int sign = involution_sign(Om);
    for (int t = 0; t < pairs; ++t) {
        ++r.cases;
        RatOperator x = random_b_element(B, rng, 3), y = random_b_element(B, rng, 3);
        RatOperator ix = anti_involution(B, B.normal_form(x)), iy = anti_involution(B, B.normal_form(y));
        if (anti_involution(B, B.normal_form(ix)) != x) r.failures.push_back("anti-involution is not an involution");
        if (frobenius_trace(B, B.compose(x, iy)) != frobenius_trace(B, B.compose(y, ix)) * Rational(sign))
            r.failures.push_back("trace pairing is not symmetric on pair " + std::to_string(t));
    }
    r.details = {{"degree", degree},         {"spanning_set", g.size}, {"rank", g.rank},
                 {"expected_rank", g.expected_rank}, {"sign", sign},  {"pairs", pairs}};
    return r;
}

Report verify_kernel(const OrderFunction& omega, const RVec& gamma, int clan_bound, int n_max) {
    Report r;
    r.check = "kernel";
    const auto& W = omega.weyl();
    ClanDecomposition D = enumerate_clans(omega, clan_bound);
    struct Case {
        std::string label;
        IVec clans;
        bool expect_kernel;
    };
    std::vector<Case> cases;
    IVec all;
    bool any_generic = false;
    for (int c = 0; c < static_cast<int>(D.clans.size()); ++c) {
        cases.push_back({"L(" + clan_label(W, D, c) + ")", {c}, !D.clans[c].generic});
        all.push_back(c);
        any_generic = any_generic || D.clans[c].generic;
    }
    cases.push_back({"projective", all, !any_generic});
    cases.push_back({"zero", {}, true});
    nlohmann::json table = nlohmann::json::array();
    for (const auto& c : cases) {
        ++r.cases;
        KernelReport k = kernel_clan_test(omega, D, gamma, clan_character(D, omega, c.clans), n_max);
        if (!k.consistent) r.failures.push_back(c.label + ": criteria disagree");
        if (k.in_kernel != c.expect_kernel) r.failures.push_back(c.label + ": unexpected kernel membership");
        std::ostringstream slope;
        slope.precision(4);
        slope << std::fixed << k.growth.slope;
        table.push_back({{"character", c.label},
                         {"in_kernel", k.in_kernel},
                         {"generic_vanishing", k.generic_vanishing},
                         {"confined", k.confined},
                         {"exponent", k.growth.exponent},
                         {"slope", slope.str()},
                         {"truncation", k.truncation}});
    }
    r.details = {{"n_max", n_max}, {"clans", static_cast<long>(D.clans.size())}, {"characters", table}};
    return r;
}

Report verify_gamma(const OrderFunction& omega, const RVec& gamma) {
    Report r;
    r.check = "gamma";
    const auto& W = omega.weyl();
    GammaChangeReport gc = gamma_change(omega, gamma, scale(Rational(2), gamma));
    r.cases += gc.checks;
    r.failures = gc.failures;
    KzContext K(omega, gamma);
    nlohmann::json eps = nlohmann::json::array();
    for (int i = 0; i < K.orbit_size(); ++i)
        for (int w = 0; w < W.finite().size(); ++w) {
            ++r.cases;
            ProductFormula p = product_formula_check(K, w, i);
            if (!p.ok)
                r.failures.push_back("product formula at w = " + W.word_string(W.finite().word(w)) + ", " +
                                     to_string(K.section(i)) + ": " + p.lhs.to_string() + " vs " + p.rhs.to_string());
            else
                eps.push_back(to_string(p.epsilon));
        }
    for (int l = 0; l < W.rank(); ++l) {
        ++r.cases;
        RVec g = skewed_gamma(omega, l, 20);
        if (!length_inequality(W, g, l)) r.failures.push_back("length inequality fails for letter " + std::to_string(l + 1));
        KzContext S(omega, g);
        for (const auto& d : iso_check(S, 0, 1).discrepancies) r.failures.push_back("skewed gamma: " + d);
    }
    r.details = {{"gamma", to_string(gamma)}, {"epsilon", eps}};
    return r;
}

Report verify_example_a1() {
    InstanceSpec spec;
    spec.name = "rank one example";
    spec.root_system = "A1";
    spec.lambda0 = {Rational(1, 4)};
    spec.h = RVec{Rational(1, 2)};
    Instance inst(spec);
    const auto& W = inst.weyl();
    const auto& om = inst.omega();
    Report r;
    r.check = "example-a1";
    r.instance = inst.digest();
    auto expect = [&](bool ok, const std::string& what) {
        ++r.cases;
        if (!ok) r.failures.push_back(what);
    };

    KzContext K(om, inst.gamma());
    expect(inst.gamma() == RVec{Rational(-1)}, "gamma is not -1");
    expect(K.sections() == std::vector<RVec>{{Rational(-3, 4)}, {Rational(-5, 4)}}, "e_gamma is not {-3/4, -5/4}");
    nlohmann::json products = nlohmann::json::array();
    std::vector<Rational> scalars;
    Poly alpha = root_poly(W.roots(), 0);
    for (int i = 0; i < K.orbit_size(); ++i) {
        expect(K.Omega().at(i, 0) == 1, "Omega(alpha) != 1 at " + to_string(K.Omega().point(i)));
        RatOperator t = K.A().word_operator({1, 0, 1, 0, 1}, K.section(i));
        Rational c = 0;
        if (t.entries().size() == 1 && t.entries().begin()->first.twist == W.finite().simple(0)) {
            RatFunc q = t.entries().begin()->second / RatFunc(alpha);
            if (q.is_polynomial() && q.as_poly().is_constant()) c = q.as_poly().constant_term();
        }
        expect(c != 0, "the five-letter product at " + to_string(K.section(i)) + " is not c * alpha * s");
        scalars.push_back(c);
        products.push_back({{"weight", to_string(K.section(i))}, {"operator", t.to_string(W.finite())}, {"c", to_string(c)}});
    }
    expect(scalars.size() == 2 && scalars[0] == scalars[1], "the scalars differ between the two weights");

    ClanDecomposition D = enumerate_clans(om, inst.clan_bound());
    nlohmann::json clans = nlohmann::json::array();
    int generic = 0;
    for (int c = 0; c < static_cast<int>(D.clans.size()); ++c) {
        const std::string label = clan_label(W, D, c);
        generic += D.clans[c].generic;
        if (label == "C0") expect(!D.clans[c].generic, "C0 is generic");
        clans.push_back({{"clan", label}, {"generic", D.clans[c].generic}, {"sample", to_string(D.clans[c].sample)}});
    }
    expect(D.clans.size() == 3 && generic == 2, "clan table is not {C+, C-, C0} with C+ and C- generic");

    Report iso = verify_iso(om, inst.gamma(), 2, 3);
    for (const auto& f : iso.failures) r.failures.push_back("iso: " + f);
    Report ker = verify_kernel(om, inst.gamma(), inst.clan_bound(), 200);
    for (const auto& f : ker.failures) r.failures.push_back("kernel: " + f);
    for (const auto& c : ker.details["characters"]) {
        const std::string label = c["character"].get<std::string>();
        if (label == "L(C0)") expect(c["in_kernel"].get<bool>() && c["exponent"] == 0, "L(C0) is not in the kernel");
        if (label == "L(C+)" || label == "L(C-)")
            expect(!c["in_kernel"].get<bool>() && c["exponent"] == 1, label + " is in the kernel");
    }
    r.details = {{"products", products}, {"clans", clans}, {"e_gamma", iso.details["e_gamma"]},
                 {"isomorphism", iso.details["generators"]}, {"kernel", ker.details["characters"]}};
    return r;
}

}  // namespace qdha
