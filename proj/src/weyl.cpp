#include "qdha/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qdha/errors.hpp"

namespace qdha {

FiniteWeyl::FiniteWeyl(const FiniteRootSystem& R) : R_(&R) {
    const int r = R.rank();
    const int nr = R.num_roots();
    IVec id(nr);
    for (int b = 0; b < nr; ++b) id[b] = b;
    std::vector<IVec> ident(r, IVec(r, 0));
    for (int i = 0; i < r; ++i) ident[i][i] = 1;
    perms_.push_back(id);
    index_[id] = 0;
    length_.push_back(0);
    mats_.push_back(ident);
    for (size_t q = 0; q < perms_.size(); ++q) {
        for (int i = 0; i < r; ++i) {
            IVec p(nr);
            for (int b = 0; b < nr; ++b) p[b] = R.reflect(i, perms_[q][b]);
            if (index_.count(p)) continue;
            int idx = static_cast<int>(perms_.size());
            index_[p] = idx;
            perms_.push_back(p);
            length_.push_back(length_[q] + 1);
            // K_{s_i w} = K_{s_i} K_w; K_{s_i} changes coordinate i only.
            std::vector<IVec> m = mats_[q];
            for (int col = 0; col < r; ++col) {
                int s = 0;
                for (int j = 0; j < r; ++j) s += R.cartan(j, i) * mats_[q][j][col];
                m[i][col] = mats_[q][i][col] - s;
            }
            mats_.push_back(m);
        }
    }
    const int n = size();
    left_simple_.assign(n, IVec(r));
    for (int w = 0; w < n; ++w)
        for (int i = 0; i < r; ++i) {
            IVec p(nr);
            for (int b = 0; b < nr; ++b) p[b] = R.reflect(i, perms_[w][b]);
            left_simple_[w][i] = index_.at(p);
        }
    for (int i = 0; i < r; ++i) simple_.push_back(left_simple_[0][i]);
    inverse_.assign(n, 0);
    for (int w = 0; w < n; ++w) {
        IVec p(nr);
        for (int b = 0; b < nr; ++b) p[perms_[w][b]] = b;
        inverse_[w] = index_.at(p);
    }
    words_.assign(n, IVec());
    for (int w = 0; w < n; ++w) {
        int cur = w;
        while (cur != 0) {
            int i = 0;
            while (!has_left_descent(cur, i)) ++i;
            words_[w].push_back(i);
            cur = left_simple_[cur][i];
        }
        if (static_cast<int>(words_[w].size()) != length_[w]) throw InternalError("finite Weyl word length mismatch");
    }
    for (int w = 0; w < n; ++w)
        if (length_[w] > length_[longest_]) longest_ = w;
    for (int b = 0; b < nr; ++b) {
        IVec p(nr);
        for (int c = 0; c < nr; ++c) p[c] = R.reflect(b, c);
        reflections_.push_back(index_.at(p));
    }
}

int FiniteWeyl::mul(int u, int v) const {
    const IVec& w = words_[u];
    int cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = left_simple_[cur][*it];
    return cur;
}

int FiniteWeyl::find(const IVec& perm) const {
    auto it = index_.find(perm);
    return it == index_.end() ? -1 : it->second;
}

RVec FiniteWeyl::act_point(int w, const RVec& x) const {
    const auto& m = mats_[w];
    RVec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Rational s = 0;
        for (size_t j = 0; j < x.size(); ++j)
            if (m[i][j]) s += m[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

AffineWeyl::AffineWeyl(FiniteRootSystem R) : S_(std::move(R)), W_(S_.finite()) {
    for (int l = 0; l < num_letters(); ++l) letters_.push_back(reflection(S_.simple(l)));
    const int r = rank();
    RVec target(r, Rational(1, roots().coxeter_number()));
    RMat at(r, RVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) at[i][j] = roots().cartan(j, i);
    x0_ = solve(at, target);
}

AffElem AffineWeyl::identity() const { return {zero_vec(rank()), 0}; }

AffElem AffineWeyl::compose(const AffElem& u, const AffElem& v) const {
    return {add(u.mu, W_.act_point(u.w, v.mu)), W_.mul(u.w, v.w)};
}

AffElem AffineWeyl::inverse(const AffElem& g) const {
    int wi = W_.inverse(g.w);
    return {neg(W_.act_point(wi, g.mu)), wi};
}

AffElem AffineWeyl::reflection(const AffineRoot& a) const {
    return {scale(Rational(-a.level), roots().coroot(a.root)), W_.reflection(a.root)};
}

AffElem AffineWeyl::from_word(const IVec& letters) const {
    AffElem g = identity();
    for (int l : letters) g = compose(g, letters_[l]);
    return g;
}

RVec AffineWeyl::act_point(const AffElem& g, const RVec& x) const { return add(W_.act_point(g.w, x), g.mu); }

AffineRoot AffineWeyl::act_root(const AffElem& g, const AffineRoot& a) const {
    int b = W_.act(g.w, a.root);
    Rational shift = roots().eval(b, g.mu);
    if (!is_integer(shift)) throw InternalError("translation does not preserve affine roots");
    return {b, a.level - to_long(shift)};
}

std::vector<AffineRoot> AffineWeyl::inversion_set(const AffElem& g) const {
    std::vector<AffineRoot> out;
    const auto& R = roots();
    for (int b = 0; b < R.num_roots(); ++b) {
        int wb = W_.act(g.w, b);
        long c = to_long(R.eval(wb, g.mu));
        long hi = std::max<long>(c, 0);
        for (long k = 0; k <= hi; ++k) {
            AffineRoot a{b, k};
            if (!S_.in_S(a) || !S_.is_positive(a)) continue;
            AffineRoot ga{wb, k - c};
            if (S_.is_negative(ga)) out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long AffineWeyl::length_inversions(const AffElem& g) const { return static_cast<long>(inversion_set(g).size()); }

long AffineWeyl::length_formula(const AffElem& g) const {
    const auto& R = roots();
    const int wi = W_.inverse(g.w);
    Rational total = 0;
    for (int a = 0; a < R.num_positive(); ++a) {
        Rational p = R.eval(a, g.mu);
        if (R.is_divisible(a)) {
            total += abs(p) / 2;
        } else if (!R.is_positive(W_.act(wi, a))) {
            total += abs(p - 1);
        } else {
            total += abs(p);
        }
    }
    return to_long(total);
}

long AffineWeyl::length_formula_right(const AffElem& g) const {
    const auto& R = roots();
    RVec nu = W_.act_point(W_.inverse(g.w), g.mu);
    Rational total = 0;
    for (int a = 0; a < R.num_positive(); ++a) {
        Rational p = R.eval(a, nu);
        if (R.is_divisible(a)) {
            total += abs(p) / 2;
        } else if (!R.is_positive(W_.act(g.w, a))) {
            total += abs(p + 1);
        } else {
            total += abs(p);
        }
    }
    return to_long(total);
}

bool AffineWeyl::is_left_descent(const AffElem& g, int letter) const {
    AffineRoot a = act_root(inverse(g), S_.simple(letter));
    return S_.is_negative(a);
}

IVec AffineWeyl::reduced_word(const AffElem& g) const {
    IVec word;
    AffElem cur = g;
    const long len = length(g);
    while (static_cast<long>(word.size()) < len) {
        int l = 0;
        while (l < num_letters() && !is_left_descent(cur, l)) ++l;
        if (l == num_letters()) throw InternalError("no descent for a non-identity element");
        word.push_back(l);
        cur = compose(letters_[l], cur);
    }
    if (!(cur == identity())) throw InternalError("reduced word does not reach the identity");
    return word;
}

AffElem AffineWeyl::min_coset_rep(const RVec& mu) const {
    const auto& R = roots();
    for (int w = 0; w < W_.size(); ++w) {
        bool ok = true;
        const int wi = W_.inverse(w);
        for (int a = 0; a < R.num_positive() && ok; ++a) {
            if (R.is_divisible(a)) continue;
            bool neg_image = !R.is_positive(W_.act(wi, a));
            ok = neg_image == (R.eval(a, mu) > 0);
        }
        if (ok) return {mu, w};
    }
    throw InternalError("no minimal coset representative");
}

RVec AffineWeyl::b_w(int w) const {
    const auto& R = roots();
    RVec out = zero_vec(rank());
    int x = W_.mul(W_.inverse(w), W_.longest());
    for (int i = 0; i < rank(); ++i)
        if (W_.has_left_descent(w, i)) out = add(out, W_.act_point(x, R.fundamental_coweights()[i]));
    return out;
}

std::vector<AffElem> AffineWeyl::stabilizer_generators(const RVec& lambda) const {
    const auto& R = roots();
    std::vector<AffElem> gens;
    for (int b = 0; b < R.num_positive(); ++b) {
        Rational v = R.eval(b, lambda);
        if (!is_integer(v)) continue;
        AffineRoot a{b, -to_long(v)};
        if (S_.in_S(a)) gens.push_back(reflection(a));
    }
    return gens;
}

std::vector<AffElem> AffineWeyl::stabilizer(const RVec& lambda) const {
    auto gens = stabilizer_generators(lambda);
    std::vector<AffElem> group{identity()};
    std::set<AffElem> seen{identity()};
    for (size_t q = 0; q < group.size(); ++q)
        for (const auto& s : gens) {
            AffElem g = compose(s, group[q]);
            if (seen.insert(g).second) group.push_back(g);
        }
    return group;
}

std::vector<AffineWeyl::OrbitPoint> AffineWeyl::orbit_window(const RVec& lambda0, int bound) const {
    std::vector<OrbitPoint> out{{lambda0, identity(), 0}};
    std::map<RVec, int> seen{{lambda0, 0}};
    for (size_t q = 0; q < out.size(); ++q) {
        if (out[q].distance >= bound) continue;
        for (int l = 0; l < num_letters(); ++l) {
            RVec p = act_point(letters_[l], out[q].point);
            if (seen.count(p)) continue;
            seen[p] = static_cast<int>(out.size());
            out.push_back({p, compose(letters_[l], out[q].witness), out[q].distance + 1});
        }
    }
    return out;
}

std::vector<AffElem> AffineWeyl::ball(int bound) const {
    std::vector<AffElem> out{identity()};
    std::vector<int> dist{0};
    std::set<AffElem> seen{identity()};
    for (size_t q = 0; q < out.size(); ++q) {
        if (dist[q] >= bound) continue;
        for (int l = 0; l < num_letters(); ++l) {
            AffElem g = compose(letters_[l], out[q]);
            if (!seen.insert(g).second) continue;
            out.push_back(g);
            dist.push_back(dist[q] + 1);
        }
    }
    return out;
}

int AffineWeyl::braid_order(int a, int b) const {
    AffineRoot x = S_.simple(a), y = S_.simple(b);
    int p = S_.pairing(x, y) * S_.pairing(y, x);
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return 0;
    }
}

std::optional<AffElem> AffineWeyl::witness(const RVec& lambda0, const RVec& lambda) const {
    for (int u = 0; u < W_.size(); ++u) {
        RVec d = sub(lambda, W_.act_point(u, lambda0));
        if (roots().coroot_lattice().contains(d)) return AffElem{d, u};
    }
    return std::nullopt;
}

std::string AffineWeyl::word_string(const IVec& w) const {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

}  // namespace qdha
