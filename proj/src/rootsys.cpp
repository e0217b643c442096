#include "qdha/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qdha/errors.hpp"

namespace qdha {

namespace {

RVec unit(int n, int i, int scale_by = 1) {
    RVec v = zero_vec(n);
    v[i] = scale_by;
    return v;
}

Rational dot(const RVec& a, const RVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<RVec> type_a(int n) {
    std::vector<RVec> s;
    for (int i = 0; i < n; ++i) s.push_back(sub(unit(n + 1, i), unit(n + 1, i + 1)));
    return s;
}

}  // namespace

FiniteRootSystem FiniteRootSystem::build(const std::string& label) {
    if (label == "B2") return from_simple_roots(label, {{1, -1}, {0, 1}});
    if (label == "C2") return from_simple_roots(label, {{1, -1}, {0, 2}});
    if (label == "G2") return from_simple_roots(label, {{1, -1, 0}, {-2, 1, 1}});
    if (label.size() >= 2 && label[0] == 'A' &&
        std::all_of(label.begin() + 1, label.end(), [](char c) { return c >= '0' && c <= '9'; }) && label[1] != '0') {
        int n = std::stoi(label.substr(1));
        if (n >= 1 && n <= 7) return from_simple_roots(label, type_a(n));
    }
    throw UsageError("unknown root system label: " + label);
}

FiniteRootSystem FiniteRootSystem::synthetic_bc(int n) {
    if (n < 1) throw UsageError("BC rank must be positive");
    std::vector<RVec> s;
    if (n == 1) {
        s.push_back({1});
    } else {
        for (int i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
        s.push_back(unit(n, n - 1));
    }
    return from_simple_roots("BC" + std::to_string(n), s, true);
}

FiniteRootSystem FiniteRootSystem::from_simple_roots(std::string label, std::vector<RVec> ambient_simple,
                                                     bool doubled_short) {
    FiniteRootSystem R;
    R.label_ = std::move(label);
    R.rank_ = static_cast<int>(ambient_simple.size());
    R.simple_ambient_ = ambient_simple;
    const int r = R.rank_;
    R.gram_.assign(r, RVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) R.gram_[i][j] = dot(ambient_simple[i], ambient_simple[j]);
    R.cartan_.assign(r, IVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational a = 2 * R.gram_[i][j] / R.gram_[i][i];
            if (!is_integer(a)) throw InternalError("non-crystallographic simple roots");
            R.cartan_[i][j] = static_cast<int>(to_long(a));
        }

    // Closure under simple reflections in root-lattice coordinates.
    std::set<IVec> found;
    std::vector<IVec> queue;
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        found.insert(e);
        queue.push_back(e);
    }
    for (size_t q = 0; q < queue.size(); ++q) {
        for (int i = 0; i < r; ++i) {
            IVec n = queue[q];
            int p = 0;
            for (int j = 0; j < r; ++j) p += R.cartan_[i][j] * n[j];
            n[i] -= p;
            if (found.insert(n).second) queue.push_back(n);
        }
    }
    auto norm = [&](const IVec& n) {
        Rational s = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) s += n[i] * n[j] * R.gram_[i][j];
        return s;
    };
    if (doubled_short) {
        Rational minimal = -1;
        for (const auto& n : found)
            if (minimal < 0 || norm(n) < minimal) minimal = norm(n);
        std::vector<IVec> extra;
        for (const auto& n : found)
            if (norm(n) == minimal) {
                IVec d = n;
                for (auto& x : d) x *= 2;
                extra.push_back(d);
            }
        for (auto& d : extra) found.insert(d);
        R.reduced_ = false;
    }
    std::vector<IVec> positive;
    for (const auto& n : found)
        if (std::all_of(n.begin(), n.end(), [](int x) { return x >= 0; })) positive.push_back(n);
    auto height_of = [](const IVec& n) {
        int h = 0;
        for (int x : n) h += x;
        return h;
    };
    std::sort(positive.begin(), positive.end(), [&](const IVec& a, const IVec& b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    R.num_positive_ = static_cast<int>(positive.size());
    R.roots_ = positive;
    for (const auto& n : positive) {
        IVec m = n;
        for (auto& x : m) x = -x;
        R.roots_.push_back(m);
    }
    const int nr = R.num_roots();
    if (2 * R.num_positive_ != static_cast<int>(found.size())) throw InternalError("root closure is not symmetric");

    const size_t amb = ambient_simple[0].size();
    for (const auto& n : R.roots_) {
        IVec f(r, 0);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) f[j] += R.cartan_[j][i] * n[i];
        R.forms_.push_back(f);
        RVec a = zero_vec(static_cast<int>(amb));
        for (int i = 0; i < r; ++i) a = add(a, scale(n[i], ambient_simple[i]));
        R.ambient_.push_back(a);
        Rational half_norm = norm(n) / 2;
        RVec c(r);
        for (int j = 0; j < r; ++j) c[j] = Rational(n[j]) * (R.gram_[j][j] / 2) / half_norm;
        R.coroots_.push_back(c);
    }
    R.divisible_.assign(nr, false);
    R.half_.assign(nr, -1);
    R.twice_.assign(nr, -1);
    for (int a = 0; a < nr; ++a) {
        IVec d = R.roots_[a];
        for (auto& x : d) x *= 2;
        int t = R.find(d);
        if (t >= 0) {
            R.twice_[a] = t;
            R.half_[t] = a;
            R.divisible_[t] = true;
        }
    }
    R.pairing_.assign(nr, IVec(nr));
    R.reflect_.assign(nr, IVec(nr));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            Rational p = 2 * R.inner(a, b) / R.inner(a, a);
            if (!is_integer(p)) throw InternalError("non-integral root pairing");
            int pi = static_cast<int>(to_long(p));
            R.pairing_[a][b] = pi;
            IVec n = R.roots_[b];
            for (int i = 0; i < r; ++i) n[i] -= pi * R.roots_[a][i];
            int idx = R.find(n);
            if (idx < 0) throw InternalError("root system not closed under reflections");
            R.reflect_[a][b] = idx;
        }
    int best = 0;
    for (int a = 1; a < R.num_positive_; ++a)
        if (R.height(a) > R.height(best)) best = a;
    for (int a = 0; a < R.num_positive_; ++a)
        if (a != best && R.height(a) == R.height(best)) throw InternalError("highest root is not unique");
    R.highest_ = best;

    std::vector<RVec> gens;
    for (int a = 0; a < nr; ++a) gens.push_back(R.coroots_[a]);
    R.coroot_lattice_ = Lattice(gens, r);

    RMat at(r, RVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) at[i][j] = R.cartan_[j][i];
    for (int i = 0; i < r; ++i) R.fund_coweights_.push_back(solve(at, unit(r, i)));

    for (int i = 0; i < r; ++i) R.root_basis_.push_back(ambient_simple[i]);
    // Fundamental weights: sum_k M_ik a_k with M = (A^T)^{-1}.
    RMat minv = inverse(at);
    for (int i = 0; i < r; ++i) {
        RVec p = zero_vec(static_cast<int>(amb));
        for (int k = 0; k < r; ++k) p = add(p, scale(minv[i][k], ambient_simple[k]));
        R.weight_basis_.push_back(p);
    }
    return R;
}

int FiniteRootSystem::find(const IVec& n) const {
    for (int i = 0; i < num_roots(); ++i)
        if (roots_[i] == n) return i;
    return -1;
}

int FiniteRootSystem::height(int root) const {
    int h = 0;
    for (int x : roots_[root]) h += x;
    return h;
}

Rational FiniteRootSystem::inner(int a, int b) const {
    Rational s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += roots_[a][i] * roots_[b][j] * gram_[i][j];
    return s;
}

Rational FiniteRootSystem::eval(int root, const RVec& x) const {
    Rational s = 0;
    const IVec& f = forms_[root];
    for (int j = 0; j < rank_; ++j)
        if (f[j]) s += f[j] * x[j];
    return s;
}

bool FiniteRootSystem::in_coweight_lattice(const RVec& x) const {
    for (int i = 0; i < rank_; ++i)
        if (!is_integer(eval(i, x))) return false;
    return true;
}

RVec FiniteRootSystem::two_rho_check() const {
    RVec s = zero_vec(rank_);
    for (int a = 0; a < num_positive_; ++a) s = add(s, coroots_[a]);
    return s;
}

AffineRootSystem::AffineRootSystem(FiniteRootSystem finite) : finite_(std::move(finite)) {}

AffineRoot AffineRootSystem::simple(int letter) const {
    if (letter == 0) return {finite_.negate(finite_.highest_root()), 1};
    return {finite_.simple(letter - 1), 0};
}

bool AffineRootSystem::in_S(const AffineRoot& a) const {
    if (!finite_.is_divisible(a.root)) return true;
    return a.level % 2 != 0;
}

AffineRoot AffineRootSystem::reflect(const AffineRoot& a, const AffineRoot& b) const {
    int p = finite_.pairing(a.root, b.root);
    return {finite_.reflect(a.root, b.root), b.level - static_cast<long>(p) * a.level};
}

std::vector<AffineRoot> AffineRootSystem::positive_window(int level_bound) const {
    std::vector<AffineRoot> out;
    for (long k = 0; k <= level_bound; ++k)
        for (int b = 0; b < finite_.num_roots(); ++b) {
            AffineRoot a{b, k};
            if (in_S(a) && is_positive(a)) out.push_back(a);
        }
    return out;
}

std::string AffineRootSystem::to_string(const AffineRoot& a) const {
    std::string s = "(";
    const IVec& n = finite_.coords(a.root);
    for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    s += ")";
    if (a.level > 0) s += "+" + std::to_string(a.level);
    if (a.level < 0) s += std::to_string(a.level);
    return s;
}

}  // namespace qdha
