#include "qdha/bqha.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qdha/errors.hpp"
#include "qdha/parallel.hpp"
#include "qdha/qdha.hpp"

namespace qdha {

BqhaAlgebra::BqhaAlgebra(const BOrderFunction& Omega) : Omega_(&Omega) {
    const auto& R = weyl().roots();
    for (int b = 0; b < R.num_roots(); ++b) root_polys_.push_back(root_poly(R, b));
}

int BqhaAlgebra::index(const RVec& weight) const {
    int i = Omega_->index(weight);
    if (i < 0) throw UsageError("weight " + to_string(weight) + " is not in the finite orbit");
    return i;
}

RVec BqhaAlgebra::act(const AffElem& g, const RVec& weight) const { return point(Omega_->act(g.w, index(weight))); }

AffElem BqhaAlgebra::element_for(const OpKey& key) const {
    if (act(element(key.twist), key.src) != key.tgt) throw InternalError("operator entry with inconsistent target");
    return element(key.twist);
}

int BqhaAlgebra::value(int i, int root) const {
    const auto& R = weyl().roots();
    return Omega_->at(i, R.is_positive(root) ? root : R.negate(root));
}

RatOperator BqhaAlgebra::generator(int letter, const RVec& weight) const {
    const int i = index(weight);
    const int alpha = weyl().roots().simple(letter);
    const int k = value(i, alpha);
    const int s = finite().simple(letter);
    RatOperator x(nvars());
    if (k >= 0) {
        x.accumulate({weight, point(Omega_->act(s, i)), s}, RatFunc(root_polys_[alpha].pow(k)));
    } else {
        RatFunc inv = RatFunc(root_polys_[alpha]).inverse();
        x.accumulate({weight, weight, s}, inv);
        x.accumulate({weight, weight, finite().identity()}, -inv);
    }
    return x;
}

RatFunc BqhaAlgebra::top_coefficient(const AffElem& g, const RVec& src) const {
    const auto& R = weyl().roots();
    const int i = index(src);
    Poly num = Poly::constant(nvars(), 1), den = Poly::constant(nvars(), 1);
    for (int b = 0; b < R.num_positive(); ++b) {
        if (R.is_divisible(b) || R.is_positive(finite().act(g.w, b))) continue;
        int k = value(i, b);
        const Poly& f = root_polys_[R.negate(b)];
        if (k > 0) num *= f.pow(k);
        if (k < 0) den *= f.pow(-k);
    }
    return weyl_act(finite(), g.w, RatFunc(num, den));
}

int BqhaAlgebra::degree_single(int w, const RVec& src) const {
    const IVec& word = finite().word(w);
    int d = 0, cur = index(src);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        d += value(cur, *it);
        cur = Omega_->act(finite().simple(*it), cur);
    }
    return d;
}

int BqhaAlgebra::degree_symmetric(int w, const RVec& src) const {
    const IVec& word = finite().word(w);
    int d = 0, cur = index(src);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int next = Omega_->act(finite().simple(*it), cur);
        d += value(cur, *it) + value(next, *it);
        cur = next;
    }
    return d;
}

StabilizerCoxeter stabilizer_coxeter(const BOrderFunction& Omega, int i, bool alternative) {
    const auto& F = Omega.weyl().finite();
    const auto& R = Omega.weyl().roots();
    StabilizerCoxeter out;
    out.group = Omega.stabilizer(i);
    std::set<int> members(out.group.begin(), out.group.end());
    for (int b = 0; b < R.num_positive(); ++b)
        if (!R.is_divisible(b) && members.count(F.reflection(b))) out.positive_roots.push_back(b);
    std::set<int> generated{F.identity()};
    std::vector<int> frontier{F.identity()};
    while (!frontier.empty()) {
        int u = frontier.back();
        frontier.pop_back();
        for (int b : out.positive_roots) {
            int v = F.mul(F.reflection(b), u);
            if (generated.insert(v).second) frontier.push_back(v);
        }
    }
    if (generated.size() != members.size()) throw InternalError("stabiliser is not a reflection group");
    auto inverted = [&](int u, int b) { return !R.is_positive(F.act(u, b)); };
    for (int b : out.positive_roots) {
        int count = 0;
        for (int c : out.positive_roots) count += inverted(F.reflection(b), c);
        if (count == 1) out.simple_roots.push_back(b);
    }
    for (int u : out.group)
        if (std::all_of(out.positive_roots.begin(), out.positive_roots.end(), [&](int c) { return inverted(u, c); }))
            out.longest = u;
    IVec simple = out.simple_roots;
    if (alternative) std::reverse(simple.begin(), simple.end());
    int cur = out.longest;
    while (cur != F.identity()) {
        bool found = false;
        for (int b : simple)
            if (inverted(F.inverse(cur), b)) {
                out.longest_word.push_back(b);
                cur = F.mul(F.reflection(b), cur);
                found = true;
                break;
            }
        if (!found) throw InternalError("no descent in the stabiliser Coxeter system");
    }
    return out;
}

Poly demazure_composition(const FiniteWeyl& W, const IVec& roots, const Poly& f) {
    Poly g = f;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) g = demazure(W, *it, g);
    return g;
}

Poly frobenius_trace(const BqhaAlgebra& B, const NormalForm& nf) {
    const auto& F = B.finite();
    const auto& Omega = B.omega();
    Poly out(B.nvars());
    for (const auto& [term, f] : nf.terms) {
        if (term.second.w != F.longest()) continue;
        int t = Omega.act(F.longest(), B.index(term.first));
        StabilizerCoxeter sc = stabilizer_coxeter(Omega, t);
        Poly g = demazure_composition(F, sc.longest_word, f);
        out += weyl_act(F, F.inverse(Omega.representative(t)), g);
    }
    return out;
}

Poly frobenius_trace(const BqhaAlgebra& B, const RatOperator& x) { return frobenius_trace(B, B.normal_form(x)); }

RatOperator anti_involution(const BqhaAlgebra& B, const NormalForm& nf) {
    RatOperator out(B.nvars());
    for (const auto& [term, f] : nf.terms) {
        RVec tgt = B.act(term.second, term.first);
        IVec rev = B.word(term.second);
        std::reverse(rev.begin(), rev.end());
        out += B.compose(B.word_operator(rev, tgt), RatOperator::multiplication(f, tgt));
    }
    return out;
}

int involution_sign(const BOrderFunction& Omega) {
    return stabilizer_coxeter(Omega, 0).positive_roots.size() % 2 == 0 ? 1 : -1;
}

std::vector<GramElement> gram_spanning_set(const BqhaAlgebra& B, int degree) {
    std::vector<GramElement> out;
    const auto monos = monomials_up_to(B.nvars(), degree);
    for (int i = 0; i < B.omega().orbit_size(); ++i)
        for (int w = 0; w < B.finite().size(); ++w)
            for (const auto& m : monos) out.push_back({m, w, i});
    return out;
}

std::vector<std::vector<Poly>> gram_matrix(const BqhaAlgebra& B, const std::vector<GramElement>& basis) {
    const auto& F = B.finite();
    const auto& Omega = B.omega();
    const size_t n = basis.size();
    const int nw = F.size();
    // top[b * nw + w] = coefficient of tau_{w0} in tau_w x_b.
    std::vector<Poly> top(n * nw);
    parallel_for(n * nw, [&](size_t k) {
        const GramElement& y = basis[k / nw];
        const int w = static_cast<int>(k % nw);
        const RVec& src = B.point(y.source);
        RVec mid = B.point(Omega.act(y.w, y.source));
        RatOperator x = B.compose(B.basis_operator(B.element(w), mid),
                                  B.compose(RatOperator::multiplication(y.monomial, mid),
                                            B.basis_operator(B.element(y.w), src)));
        NormalForm nf = B.normal_form(x);
        auto it = nf.terms.find({src, B.element(F.longest())});
        top[k] = it == nf.terms.end() ? Poly(B.nvars()) : it->second;
    });
    std::vector<std::vector<Poly>> G(n, std::vector<Poly>(n, Poly(B.nvars())));
    parallel_for(n, [&](size_t a) {
        const GramElement& x = basis[a];
        for (size_t b = 0; b < n; ++b) {
            const GramElement& y = basis[b];
            if (Omega.act(y.w, y.source) != x.source) continue;
            const Poly& c = top[b * nw + x.w];
            if (c.is_zero()) continue;
            NormalForm nf;
            nf.terms.emplace(std::make_pair(B.point(y.source), B.element(F.longest())), x.monomial * c);
            G[a][b] = frobenius_trace(B, nf);
        }
    });
    return G;
}

GramReport gram_rank(const BqhaAlgebra& B, int degree, std::mt19937& rng) {
    const auto& F = B.finite();
    const auto& Omega = B.omega();
    GramReport rep;
    for (int j = 0; j < B.nvars(); ++j) {
        Rational q(static_cast<int>(rng() % 97) + 3, static_cast<int>(rng() % 13) + 2);
        if (rng() % 2) q = -q;
        q.canonicalize();
        rep.point.push_back(q);
    }
    auto basis = gram_spanning_set(B, degree);
    rep.size = static_cast<long>(basis.size());
    auto G = gram_matrix(B, basis);
    // The rank is additive over the connected components of the nonzero pattern.
    const size_t n = basis.size();
    std::vector<size_t> parent(2 * n);
    for (size_t k = 0; k < parent.size(); ++k) parent[k] = k;
    auto find = [&](size_t k) {
        while (parent[k] != k) k = parent[k] = parent[parent[k]];
        return k;
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (!G[a][b].is_zero()) parent[find(a)] = find(n + b);
    std::map<size_t, std::pair<std::vector<size_t>, std::vector<size_t>>> blocks;
    for (size_t a = 0; a < n; ++a) blocks[find(a)].first.push_back(a);
    for (size_t b = 0; b < n; ++b) blocks[find(n + b)].second.push_back(b);
    for (const auto& [root, rc] : blocks) {
        if (rc.first.empty() || rc.second.empty()) continue;
        RMat M(rc.first.size(), RVec(rc.second.size()));
        for (size_t i = 0; i < rc.first.size(); ++i)
            for (size_t j = 0; j < rc.second.size(); ++j) {
                const Poly& g = G[rc.first[i]][rc.second[j]];
                M[i][j] = g.is_zero() ? Rational(0) : g.eval(rep.point);
            }
        rep.rank += rank(M);
    }
    const auto monos = monomials_up_to(B.nvars(), degree);
    for (int i = 0; i < Omega.orbit_size(); ++i)
        for (int w = 0; w < F.size(); ++w) {
            IVec H = Omega.stabilizer(Omega.act(w, i));
            RMat E;
            for (const auto& m : monos) {
                RVec row;
                for (int u : H) row.push_back(weyl_act(F, u, m).eval(rep.point));
                E.push_back(row);
            }
            rep.expected_rank += rank(E);
        }
    return rep;
}

}  // namespace qdha
