#include "qdha/kz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qdha/errors.hpp"
#include "qdha/parallel.hpp"

namespace qdha {

namespace {

std::string nf_string(const OperatorAlgebra& X, const NormalForm& nf, const AffineWeyl& W) {
    if (nf.is_zero()) return "0";
    std::string out;
    for (const auto& [term, f] : nf.terms) {
        if (!out.empty()) out += " + ";
        out += "(" + f.to_string() + ") tau" + W.word_string(X.word(term.second)) + " e(" + to_string(term.first) +
               ")";
    }
    return out;
}

void add_scaled(NormalForm& acc, const NormalForm& nf, const Poly& f) {
    for (const auto& [term, g] : nf.terms) {
        Poly h = f * g;
        auto it = acc.terms.find(term);
        if (it == acc.terms.end()) {
            if (!h.is_zero()) acc.terms.emplace(term, h);
        } else {
            it->second += h;
            if (it->second.is_zero()) acc.terms.erase(it);
        }
    }
}

const std::pair<const std::pair<RVec, AffElem>, Poly>* leading_term(const OperatorAlgebra& X, const NormalForm& nf) {
    const std::pair<const std::pair<RVec, AffElem>, Poly>* best = nullptr;
    long best_len = -1;
    for (const auto& t : nf.terms) {
        long l = X.length(t.first.second);
        if (l > best_len) best = &t, best_len = l;
    }
    return best;
}

}  // namespace

AffElem pregamma_element(const AffineWeyl& W, const RVec& gamma, int w) {
    return W.compose(W.compose(W.translation(gamma), W.finite_elem(w)), W.translation(neg(gamma)));
}

std::vector<RVec> e_gamma(const BOrderFunction& Omega, const RVec& gamma) {
    std::vector<RVec> out;
    for (int i = 0; i < Omega.orbit_size(); ++i) out.push_back(pregamma_point(Omega, gamma, i));
    return out;
}

bool section_is_equivariant(const BOrderFunction& Omega) {
    const auto& F = Omega.weyl().finite();
    for (int i = 0; i < Omega.orbit_size(); ++i) {
        RVec lambda = F.act_point(Omega.representative(i), Omega.base());
        for (int u : Omega.stabilizer(i))
            if (F.act_point(u, lambda) != lambda) return false;
    }
    return true;
}

KzContext::KzContext(const OrderFunction& omega, RVec gamma)
    : omega_(&omega),
      gamma_(std::move(gamma)),
      Omega_(integral(omega, gamma_)),
      A_(omega),
      B_(Omega_),
      sections_(e_gamma(Omega_, gamma_)) {}

RatOperator KzContext::sigma(int letter, int i) const {
    const auto& F = weyl().finite();
    const int alpha = weyl().roots().simple(letter);
    const int s = F.simple(letter);
    const int k = Omega_.at(i, alpha);
    const RVec& src = sections_[i];
    Poly a = root_poly(weyl().roots(), alpha);
    RatOperator x(weyl().rank());
    if (k >= 0) {
        x.accumulate({src, sections_[Omega_.act(s, i)], s}, RatFunc(a.pow(k)));
    } else {
        RatFunc inv = RatFunc(a).inverse();
        x.accumulate({src, src, s}, inv);
        x.accumulate({src, src, F.identity()}, -inv);
    }
    return x;
}

RatOperator KzContext::sigma_word(int w, int i) const {
    const auto& F = weyl().finite();
    const IVec& word = F.word(w);
    RatOperator x = A_.idempotent(sections_[i]);
    int cur = i;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        x = A_.compose(sigma(*it, cur), x);
        cur = Omega_.act(F.simple(*it), cur);
    }
    return x;
}

RatOperator KzContext::image(const RatOperator& x) const {
    RatOperator out(x.nvars());
    for (const auto& [key, r] : x.entries())
        out.accumulate({sections_[B_.index(key.src)], sections_[B_.index(key.tgt)], key.twist}, r);
    return out;
}

RatOperator KzContext::idempotent() const {
    RatOperator out(weyl().rank());
    for (const auto& s : sections_) out += A_.idempotent(s);
    return out;
}

IsoReport iso_check(const KzContext& K, int degree, int word_bound) {
    const auto& W = K.weyl();
    const auto& F = W.finite();
    const auto& A = K.A();
    const auto& B = K.B();
    const auto& Omega = K.Omega();
    const int n = K.orbit_size();
    const int nw = F.size();
    const int r = W.rank();
    IsoReport rep;
    if (!section_is_equivariant(Omega)) rep.discrepancies.push_back("the gamma-section is not equivariant");

    for (int i = 0; i < n; ++i)
        for (int l = 0; l < r; ++l) {
            GeneratorImage g;
            g.letter = l;
            g.source = i;
            const int s = F.simple(l);
            g.omega_value = Omega.at(i, W.roots().simple(l));
            g.degree_single = B.degree_single(s, B.point(i));
            g.degree_symmetric = B.degree_symmetric(s, B.point(i));
            AffElem expected = pregamma_element(W, K.gamma(), s);
            g.degree_a = A.degree(expected, K.section(i));
            g.leading_length = A.length(expected);
            const std::string tag = "sigma_" + std::to_string(l + 1) + " e(" + to_string(K.section(i)) + ")";
            RatOperator sig = K.sigma(l, i);
            if (K.image(B.tau(l, B.point(i))) != sig) rep.discrepancies.push_back(tag + ": image of tau differs");
            try {
                NormalForm nf = A.normal_form(sig);
                g.normal_form = nf_string(A, nf, W);
                auto lead = leading_term(A, nf);
                if (!lead || lead->first != std::make_pair(K.section(i), expected))
                    rep.discrepancies.push_back(tag + ": leading term is not the gamma-conjugate of s_alpha");
                else if (!lead->second.is_constant())
                    rep.discrepancies.push_back(tag + ": leading coefficient is not constant");
                if (Omega.act(s, i) != i && nf.terms.size() != 1)
                    rep.discrepancies.push_back(tag + ": normal form has more than one term");
            } catch (const NotInAlgebra& e) {
                rep.discrepancies.push_back(tag + ": not in A (" + e.what() + ")");
            }
            rep.generators.push_back(g);
        }

    // sigma_w e(section(i)) against tau_{gamma w} e(section(i)).
    std::vector<NormalForm> basis(static_cast<size_t>(n) * nw);
    std::vector<std::string> basis_errors(basis.size());
    rep.scalars.assign(basis.size(), Rational(0));
    parallel_for(basis.size(), [&](size_t k) {
        const int i = static_cast<int>(k / nw), w = static_cast<int>(k % nw);
        const std::string tag = "sigma_w e(" + to_string(K.section(i)) + "), w = " + W.word_string(F.word(w));
        try {
            basis[k] = A.normal_form(K.sigma_word(w, i));
        } catch (const NotInAlgebra& e) {
            basis_errors[k] = tag + ": not in A (" + e.what() + ")";
            return;
        }
        AffElem expected = pregamma_element(W, K.gamma(), w);
        auto it = basis[k].terms.find({K.section(i), expected});
        if (it == basis[k].terms.end() || !it->second.is_constant()) {
            basis_errors[k] = tag + ": no constant coefficient at the gamma-conjugate of w";
            return;
        }
        rep.scalars[k] = it->second.constant_term();
        for (const auto& t : basis[k].terms)
            if (!(t.first.second == expected) && A.length(t.first.second) >= A.length(expected))
                basis_errors[k] = tag + ": term not below the gamma-conjugate of w";
    });
    for (const auto& e : basis_errors)
        if (!e.empty()) rep.discrepancies.push_back(e);
    for (int i = 0; i < n; ++i) {
        std::set<AffElem> leads;
        for (int w = 0; w < nw; ++w) {
            AffElem g = pregamma_element(W, K.gamma(), w);
            leads.insert(g);
            RVec tgt = W.act_point(g, K.section(i));
            if (std::find(K.sections().begin(), K.sections().end(), tgt) == K.sections().end())
                rep.discrepancies.push_back("gamma-conjugate of w leaves e_gamma at " + to_string(K.section(i)));
        }
        const long stab = static_cast<long>(W.stabilizer(K.section(i)).size());
        if (static_cast<int>(leads.size()) != nw || stab * n != nw)
            rep.discrepancies.push_back("basis count mismatch at " + to_string(K.section(i)));
    }

    // Idempotents.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatOperator p = A.compose(K.image(B.idempotent(B.point(i))), K.image(B.idempotent(B.point(j))));
            RatOperator expect = i == j ? A.idempotent(K.section(i)) : RatOperator(r);
            if (p != expect) rep.discrepancies.push_back("idempotent product mismatch");
        }

    // Products of generators.
    std::vector<Poly> monos;
    for (const auto& m : monomials_up_to(r, degree))
        if (!m.is_constant()) monos.push_back(m);
    const int alphabet = r + static_cast<int>(monos.size());
    std::vector<IVec> sequences;
    for (int len = 1; len <= word_bound; ++len) {
        IVec seq(len, 0);
        while (true) {
            sequences.push_back(seq);
            int p = 0;
            while (p < len && ++seq[p] == alphabet) seq[p++] = 0;
            if (p == len) break;
        }
    }
    const size_t total = sequences.size() * n;
    std::vector<std::string> errors(total);
    parallel_for(total, [&](size_t k) {
        const IVec& seq = sequences[k / n];
        const int src = static_cast<int>(k % n);
        std::string tag;
        RatOperator x = B.idempotent(B.point(src));
        int cur = src;
        for (int a : seq) {
            if (a < r) {
                x = B.compose(B.tau(a, B.point(cur)), x);
                cur = Omega.act(F.simple(a), cur);
                tag = "t" + std::to_string(a + 1) + " " + tag;
            } else {
                x = B.compose(RatOperator::multiplication(monos[a - r], B.point(cur)), x);
                tag = "(" + monos[a - r].to_string() + ") " + tag;
            }
        }
        tag += "e(" + to_string(B.point(src)) + ")";
        try {
            NormalForm nb = B.normal_form(x);
            NormalForm expect;
            for (const auto& [term, f] : nb.terms) add_scaled(expect, basis[B.index(term.first) * nw + term.second.w], f);
            NormalForm actual = A.normal_form(K.image(x));
            if (!(actual == expect)) errors[k] = tag + ": normal forms differ";
        } catch (const NotInAlgebra& e) {
            errors[k] = tag + ": " + e.what();
        }
    });
    rep.products_checked = static_cast<long>(total);
    for (const auto& e : errors)
        if (!e.empty()) rep.discrepancies.push_back(e);
    return rep;
}

bool is_signed_power_of_two(const Rational& q) {
    if (q == 0) return false;
    mpz_class num = abs(q.get_num()), den = q.get_den();
    auto pow2 = [](const mpz_class& z) { return z > 0 && (z & (z - 1)) == 0; };
    return pow2(num) && pow2(den);
}

ProductFormula product_formula_check(const KzContext& K, int w, int i) {
    const auto& W = K.weyl();
    const auto& R = W.roots();
    const auto& F = W.finite();
    const int nv = W.rank();
    ProductFormula out;
    out.w = w;
    out.source = i;
    const RVec& lambda = K.section(i);
    RatFunc lhs = RatFunc::constant(nv, 1), rhs = RatFunc::constant(nv, 1);
    for (const auto& b : W.inversion_set(pregamma_element(W, K.gamma(), w))) {
        int k = K.omega().at(lambda, b);
        if (k != 0) lhs *= RatFunc(-root_poly(R, b.root)).pow(k);
    }
    for (int b = 0; b < R.num_positive(); ++b) {
        if (R.is_divisible(b) || R.is_positive(F.act(w, b))) continue;
        int k = K.Omega().at(i, b);
        if (k != 0) rhs *= RatFunc(-root_poly(R, b)).pow(k);
    }
    out.lhs = lhs;
    out.rhs = rhs;
    RatFunc q = lhs / rhs;
    if (q.is_polynomial() && q.as_poly().is_constant()) {
        out.epsilon = q.as_poly().constant_term();
        out.ok = is_signed_power_of_two(out.epsilon);
    }
    return out;
}

RatOperator gamma_intertwiner(const KzContext& to, const KzContext& from) {
    const auto& W = to.weyl();
    AffElem t = W.translation(sub(to.gamma(), from.gamma()));
    RatOperator out(W.rank());
    for (int i = 0; i < from.orbit_size(); ++i) {
        RatOperator p = to.A().phi_element(t, from.section(i));
        for (const auto& [key, r] : p.entries())
            if (key.tgt != to.section(i)) throw InternalError("intertwiner leaves the gamma-section");
        out += p;
    }
    return out;
}

GammaChangeReport gamma_change(const OrderFunction& omega, const RVec& gamma, const RVec& gamma2) {
    GammaChangeReport rep;
    KzContext K(omega, gamma), K2(omega, gamma2);
    const auto& A = K.A();
    const int r = K.weyl().rank();
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) rep.failures.push_back(what);
    };
    check(K.Omega().values() == K2.Omega().values(), "integral depends on gamma");
    RatOperator phi, phi2;
    try {
        phi = gamma_intertwiner(K, K2);
        phi2 = gamma_intertwiner(K2, K);
    } catch (const InternalError& e) {
        rep.failures.push_back(e.what());
        return rep;
    }
    try {
        A.normal_form(phi);
        A.normal_form(phi2);
        ++rep.checks;
    } catch (const NotInAlgebra&) {
        rep.failures.push_back("intertwiner not in A");
    }
    check(A.compose(phi, phi2) == K.idempotent(), "phi phi' != e_gamma");
    check(A.compose(phi2, phi) == K2.idempotent(), "phi' phi != e_gamma'");
    for (int i = 0; i < K.orbit_size(); ++i) {
        const std::string at = " at " + to_string(K.section(i));
        for (int l = 0; l < r; ++l)
            check(A.compose(phi, A.compose(K2.sigma(l, i), phi2)) == K.sigma(l, i),
                  "conjugate of sigma_" + std::to_string(l + 1) + at);
        for (int j = 0; j < r; ++j) {
            Poly x = Poly::variable(r, j);
            check(A.compose(phi, A.compose(RatOperator::multiplication(x, K2.section(i)), phi2)) ==
                      RatOperator::multiplication(x, K.section(i)),
                  "conjugate of x" + std::to_string(j + 1) + at);
        }
    }
    return rep;
}

RVec skewed_gamma(const OrderFunction& omega, int letter, int K) {
    const auto& R = omega.weyl().roots();
    const int M = omega.max_level() + 1;
    RVec sum = zero_vec(R.rank());
    for (int j = 0; j < R.rank(); ++j)
        if (j != letter) sum = add(sum, R.fundamental_coweights()[j]);
    int c = 1;
    while (!R.coroot_lattice().contains(scale(Rational(c), sum))) ++c;
    RVec g = add(scale(Rational(M), R.two_rho_check()), scale(Rational(c * K), sum));
    for (auto& x : g) x.canonicalize();
    return neg(g);
}

bool length_inequality(const AffineWeyl& W, const RVec& gamma, int letter) {
    const auto& F = W.finite();
    const long l = W.length(pregamma_element(W, gamma, F.simple(letter)));
    for (int w = 0; w < F.size(); ++w)
        if (w != F.identity() && W.length(pregamma_element(W, gamma, w)) < l) return false;
    return true;
}

Character clan_character(const ClanDecomposition& D, const OrderFunction& omega, const IVec& clans) {
    IVec sorted = clans;
    std::sort(sorted.begin(), sorted.end());
    return [&D, &omega, sorted](const RVec& lambda) -> long {
        return std::binary_search(sorted.begin(), sorted.end(), clan_of_weight(D, omega, lambda)) ? 1 : 0;
    };
}

GrowthReport gk_growth(const OrderFunction& omega, const Character& ch, int n_max) {
    GrowthReport rep;
    rep.counts.assign(n_max + 1, 0);
    for (const auto& p : omega.weyl().orbit_window(omega.base(), n_max)) rep.counts[p.distance] += ch(p.point);
    for (int n = 1; n <= n_max; ++n) rep.counts[n] += rep.counts[n - 1];
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int n = std::max(1, n_max / 2); n <= n_max; ++n) {
        if (rep.counts[n] <= 0) continue;
        double x = std::log(static_cast<double>(n)), y = std::log(static_cast<double>(rep.counts[n]));
        sx += x, sy += y, sxx += x * x, sxy += x * y;
        ++m;
    }
    if (m < 2) return rep;
    rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    rep.exponent = static_cast<int>(std::lround(rep.slope));
    return rep;
}

KernelReport kernel_clan_test(const OrderFunction& omega, const ClanDecomposition& D, const RVec& gamma,
                              const Character& ch, int n_max) {
    const auto& W = omega.weyl();
    const auto& R = W.roots();
    KernelReport rep;
    std::map<int, long> per_clan;
    rep.generic_vanishing = true;
    Rational half(-1), full(-1);
    for (const auto& p : W.orbit_window(omega.base(), n_max)) {
        const int c = clan_of_weight(D, omega, p.point);
        const long v = ch(p.point);
        auto [it, fresh] = per_clan.emplace(c, v);
        if (!fresh && it->second != v) throw UsageError("character is not constant on clan " + std::to_string(c));
        if (v != 0 && D.clans[c].generic) rep.generic_vanishing = false;
        if (v == 0) continue;
        Rational m(-1);
        for (int b = 0; b < R.num_positive(); ++b) {
            Rational x = abs(R.eval(b, p.point));
            if (m < 0 || x < m) m = x;
        }
        if (p.distance <= n_max / 2 && m > half) half = m;
        if (m > full) full = m;
    }
    rep.bound_half = half;
    rep.bound_full = full;
    rep.confined = half == full;
    for (const auto& lambda : e_gamma(integral(omega, gamma), gamma)) rep.truncation += ch(lambda);
    rep.growth = gk_growth(omega, ch, n_max);
    rep.small_growth = rep.growth.exponent <= W.rank() - 1;
    rep.in_kernel = rep.generic_vanishing;
    rep.consistent = rep.generic_vanishing == rep.confined && rep.confined == rep.small_growth &&
                     rep.generic_vanishing == (rep.truncation == 0);
    return rep;
}

}  // namespace qdha
