#include "qdha/qdha.hpp"

#include <algorithm>
#include <set>

#include "qdha/errors.hpp"

namespace qdha {

QdhaAlgebra::QdhaAlgebra(const OrderFunction& omega) : omega_(&omega) {
    const auto& R = weyl().roots();
    for (int b = 0; b < R.num_roots(); ++b) root_polys_.push_back(root_poly(R, b));
}

AffElem QdhaAlgebra::element_for(const OpKey& key) const {
    RVec mu = sub(key.tgt, finite().act_point(key.twist, key.src));
    if (!weyl().roots().coroot_lattice().contains(mu)) throw InternalError("operator entry between weights in different orbits");
    return {mu, key.twist};
}

RatOperator QdhaAlgebra::generator(int letter, const RVec& weight) const {
    const AffineRoot a = weyl().affine().simple(letter);
    const int k = omega_->at(weight, a);
    const int s = finite().reflection(a.root);
    const int n = nvars();
    RatOperator x(n);
    if (k >= 0) {
        RVec tgt = act(letter_element(letter), weight);
        x.accumulate({weight, tgt, s}, RatFunc(root_polys_[a.root].pow(k)));
    } else {
        RatFunc inv = RatFunc(root_polys_[a.root]).inverse();
        x.accumulate({weight, weight, s}, inv);
        x.accumulate({weight, weight, finite().identity()}, -inv);
    }
    return x;
}

RatFunc QdhaAlgebra::top_coefficient(const AffElem& g, const RVec& src) const {
    const auto& R = weyl().roots();
    Poly num = Poly::constant(nvars(), 1), den = Poly::constant(nvars(), 1);
    for (const auto& b : weyl().inversion_set(g)) {
        int k = omega_->at(src, b);
        Poly f = root_polys_[R.negate(b.root)];
        if (k > 0) num *= f.pow(k);
        if (k < 0) den *= f.pow(-k);
    }
    return weyl_act(finite(), g.w, RatFunc(num, den));
}

RatOperator QdhaAlgebra::phi(int letter, const RVec& weight) const {
    const AffineRoot a = weyl().affine().simple(letter);
    if (omega_->at(weight, a) >= 0) return generator(letter, weight);
    RatOperator x(nvars());
    x.accumulate({weight, weight, finite().reflection(a.root)}, RatFunc::constant(nvars(), 1));
    return x;
}

RatOperator QdhaAlgebra::phi_element(const AffElem& g, const RVec& src) const {
    IVec w = word(g);
    RatOperator x = idempotent(src);
    RVec cur = src;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        x = compose(phi(*it, cur), x);
        cur = act(letter_element(*it), cur);
    }
    return x;
}

int QdhaAlgebra::degree(const AffElem& g, const RVec& src) const {
    IVec w = word(g);
    int d = 0;
    RVec cur = src;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        d += omega_->tau_degree(*it, cur);
        cur = act(letter_element(*it), cur);
    }
    return d;
}

NormalForm QdhaAlgebra::commutation_defect(const Poly& f, const IVec& letters, const RVec& lambda) const {
    RatOperator t = word_operator(letters, lambda);
    AffElem w = weyl().from_word(letters);
    RatOperator left = t.left_multiply(RatFunc(f));
    Poly g = weyl_act(finite(), finite().inverse(w.w), f);
    RatOperator right = compose(t, RatOperator::multiplication(g, lambda));
    return normal_form(left - right);
}

long QdhaAlgebra::braid_defect(int a, int b, const RVec& lambda) const {
    const int m = weyl().braid_order(a, b);
    if (a == b || m == 0) throw UsageError("braid defect needs two letters with finite braid order");
    IVec w1, w2;
    for (int i = 0; i < m; ++i) {
        w1.push_back(i % 2 == 0 ? a : b);
        w2.push_back(i % 2 == 0 ? b : a);
    }
    return filtration_degree(normal_form(word_operator(w1, lambda) - word_operator(w2, lambda)));
}

IVec finite_stabilizer(const AffineWeyl& W, const RVec& point) {
    IVec out;
    for (const auto& g : W.stabilizer(point)) out.push_back(g.w);
    std::sort(out.begin(), out.end());
    return out;
}

Poly average(const FiniteWeyl& W, const IVec& group, const Poly& f) {
    Poly s(f.nvars());
    for (int u : group) s += weyl_act(W, u, f);
    return s * Rational(1, static_cast<long>(group.size()));
}

std::vector<Poly> monomials_up_to(int nvars, int d) {
    std::vector<Poly> out;
    for (int deg = 0; deg <= d; ++deg) {
        std::vector<Mono> level;
        std::vector<int> e(nvars, 0);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == nvars - 1) {
                e[i] = left;
                Mono mono{};
                for (int j = 0; j < nvars; ++j) mono[j] = static_cast<std::uint16_t>(e[j]);
                level.push_back(mono);
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[i] = v;
                self(self, i + 1, left - v);
            }
        };
        rec(rec, 0, deg);
        for (const auto& mono : level) out.push_back(Poly::monomial(nvars, mono, 1));
    }
    return out;
}

RatOperator QdhaAlgebra::centre_element(const Poly& f, const RVec& lambda) const {
    const AffElem& g = omega_->witness(lambda);
    return RatOperator::multiplication(weyl_act(finite(), g.w, f), lambda);
}

std::vector<Poly> QdhaAlgebra::centre_generators(int max_degree) const {
    IVec group = finite_stabilizer(weyl(), omega_->base());
    std::vector<Poly> out;
    std::set<Poly> seen;
    for (const auto& m : monomials_up_to(nvars(), max_degree)) {
        if (m.total_degree() == 0) continue;
        Poly p = average(finite(), group, m);
        if (p.is_zero()) continue;
        p = p.monic();
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

bool QdhaAlgebra::centre_commutes(const Poly& f, const RVec& lambda) const {
    RatOperator z = centre_element(f, lambda);
    for (int l = 0; l < num_letters(); ++l) {
        RatOperator t = generator(l, lambda);
        RVec tgt = act(letter_element(l), lambda);
        if (compose(centre_element(f, tgt), t) != compose(t, z)) return false;
    }
    return true;
}

ParabolicReport parabolic_decomposition_check(const QdhaAlgebra& A, const RVec& lambda, int bound) {
    ParabolicReport rep;
    const auto& W = A.weyl();
    std::set<AffElem> cosets;
    for (const auto& g : W.ball(bound)) {
        ++rep.elements;
        AffElem theta = W.min_coset_rep(g.mu);
        cosets.insert(theta);
        AffElem u = W.compose(W.inverse(theta), g);
        if (!is_zero(u.mu)) {
            rep.failures.push_back("coset quotient is not finite for " + W.word_string(W.reduced_word(g)));
            continue;
        }
        if (W.length(theta) + W.length(u) != W.length(g)) {
            rep.failures.push_back("lengths do not add for " + W.word_string(W.reduced_word(g)));
            continue;
        }
        RatOperator x = A.compose(A.basis_operator(theta, W.act_point(u, lambda)), A.basis_operator(u, lambda));
        NormalForm nf = A.normal_form(x);
        auto it = nf.terms.find({lambda, g});
        bool ok = A.filtration_degree(nf) == W.length(g) && it != nf.terms.end() && it->second.is_constant() &&
                  it->second.constant_term() == 1;
        for (const auto& [term, f] : nf.terms)
            if (W.length(term.second) == W.length(g) && !(term.second == g)) ok = false;
        if (!ok) rep.failures.push_back("leading term mismatch for " + W.word_string(W.reduced_word(g)));
    }
    rep.cosets = static_cast<long>(cosets.size());
    return rep;
}

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

GradedDimension graded_dim_hom(const QdhaAlgebra& A, const RVec& src, const RVec& tgt, int max_degree) {
    GradedDimension out;
    const auto& W = A.weyl();
    const auto& om = A.omega();
    if (!om.in_orbit(src) || !om.in_orbit(tgt)) return out;
    const AffElem& gs = om.witness(src);
    const AffElem& gt = om.witness(tgt);
    AffElem g0 = W.compose(gt, W.inverse(gs));
    const auto stab = W.stabilizer(src);
    const int r = W.rank();
    // Coinvariant Hilbert series of the stabiliser, from lengths in its own Coxeter system.
    const auto& R = W.roots();
    IVec refl_roots;
    std::set<int> refl_seen;
    for (int b = 0; b < R.num_positive(); ++b) {
        Rational v = R.eval(b, src);
        if (!is_integer(v) || !W.affine().in_S({b, -to_long(v)})) continue;
        if (refl_seen.insert(W.finite().reflection(b)).second) refl_roots.push_back(b);
    }
    std::map<int, long> coinv;
    for (const auto& h : stab) {
        int len = 0;
        for (int b : refl_roots)
            if (!R.is_positive(W.finite().act(h.w, b))) ++len;
        coinv[2 * len] += 1;
    }
    for (const auto& h : stab) {
        AffElem g = W.compose(g0, h);
        ++out.basis_size;
        int d = A.degree(g, src);
        for (int j = 0; d + 2 * j <= max_degree; ++j) out.free_module[d + 2 * j] += binomial(j + r - 1, r - 1);
        for (const auto& [e, c] : coinv)
            if (d + e <= max_degree) out.quotient[d + e] += c;
    }
    return out;
}

}  // namespace qdha
