#include "qdha/clans.hpp"

#include <algorithm>
#include <set>

#include "qdha/errors.hpp"

namespace qdha {

namespace {

// Scales a row so that its first nonzero entry has absolute value 1.
RVec normalized(RVec r) {
    for (const auto& x : r)
        if (x != 0) {
            Rational s = abs(x);
            for (auto& y : r) {
                y /= s;
                y.canonicalize();
            }
            break;
        }
    return r;
}

// Row of s * (da(v) + level t) in the homogenised variables (v, t).
RVec homogeneous_row(const AffineRootSystem& S, const AffineRoot& a, int sign) {
    const auto& form = S.finite().form(a.root);
    RVec row;
    for (int c : form) row.push_back(Rational(sign * c));
    row.push_back(Rational(sign * a.level));
    return row;
}

RVec cone_row(const AffineRootSystem& S, const AffineRoot& a, int sign) {
    RVec row;
    for (int c : S.finite().form(a.root)) row.push_back(Rational(sign * c));
    return row;
}

}  // namespace

bool strictly_feasible(std::vector<RVec> rows) {
    if (rows.empty()) return true;
    const size_t n = rows.front().size();
    auto is_null = [](const RVec& r) { return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }); };
    if (std::any_of(rows.begin(), rows.end(), is_null)) return false;
    for (size_t var = 0; var < n; ++var) {
        std::vector<RVec> pos, neg;
        std::set<RVec> next;
        for (auto& r : rows) {
            if (r[var] > 0) pos.push_back(r);
            else if (r[var] < 0) neg.push_back(r);
            else next.insert(normalized(r));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                RVec c(n);
                Rational lp = -q[var], lq = p[var];
                for (size_t j = 0; j < n; ++j) {
                    c[j] = lp * p[j] + lq * q[j];
                    c[j].canonicalize();
                }
                next.insert(normalized(c));
            }
        rows.assign(next.begin(), next.end());
        if (std::any_of(rows.begin(), rows.end(), is_null)) return false;
    }
    return true;
}

int ClanDecomposition::find(const SignVector& s) const {
    for (size_t i = 0; i < clans.size(); ++i)
        if (clans[i].signs == s) return static_cast<int>(i);
    return -1;
}

std::vector<AffineRoot> clan_hyperplanes(const OrderFunction& omega) {
    const auto& S = omega.weyl().affine();
    std::set<AffineRoot> out;
    for (const auto& [a, v] : omega.support())
        if (v >= 1 && S.in_S(a)) out.insert(S.positive_representative(a));
    return {out.begin(), out.end()};
}

SignVector sign_vector(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes, const RVec& x) {
    SignVector s;
    for (const auto& a : hyperplanes) {
        Rational v = S.eval(a, x);
        if (v == 0) throw InternalError("sample point " + to_string(x) + " lies on a clan wall");
        s.push_back(v > 0 ? 1 : -1);
    }
    return s;
}

bool realizable(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes, const SignVector& s) {
    std::vector<RVec> rows;
    for (size_t i = 0; i < hyperplanes.size(); ++i) rows.push_back(homogeneous_row(S, hyperplanes[i], s[i]));
    RVec t(S.rank() + 1, Rational(0));
    t.back() = 1;
    rows.push_back(t);
    return strictly_feasible(rows);
}

std::vector<SignVector> arrangement_regions(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes) {
    std::vector<SignVector> cur{{}};
    for (size_t i = 0; i < hyperplanes.size(); ++i) {
        std::vector<AffineRoot> prefix(hyperplanes.begin(), hyperplanes.begin() + static_cast<long>(i) + 1);
        std::vector<SignVector> next;
        for (const auto& s : cur)
            for (int sign : {1, -1}) {
                SignVector t = s;
                t.push_back(sign);
                if (realizable(S, prefix, t)) next.push_back(t);
            }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

bool is_generic(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes, const SignVector& s) {
    std::vector<RVec> rows;
    for (size_t i = 0; i < hyperplanes.size(); ++i) rows.push_back(cone_row(S, hyperplanes[i], s[i]));
    return strictly_feasible(rows);
}

ClanDecomposition enumerate_clans(const OrderFunction& omega, int exploration_bound) {
    const auto& W = omega.weyl();
    const auto& S = W.affine();
    ClanDecomposition D;
    D.hyperplanes = clan_hyperplanes(omega);
    std::map<SignVector, size_t> seen;
    for (const auto& g : W.ball(exploration_bound)) {
        ++D.alcoves_explored;
        RVec x = W.alcove_point(g);
        SignVector s = sign_vector(S, D.hyperplanes, x);
        if (seen.count(s)) continue;
        seen.emplace(s, D.clans.size());
        D.clans.push_back({s, g, x, is_generic(S, D.hyperplanes, s)});
    }
    for (const auto& s : arrangement_regions(S, D.hyperplanes))
        if (!seen.count(s))
            throw IncompleteExploration("a clan has no alcove of length <= " + std::to_string(exploration_bound));
    std::sort(D.clans.begin(), D.clans.end(), [](const Clan& a, const Clan& b) { return a.signs > b.signs; });
    return D;
}

int clan_of_weight(const ClanDecomposition& D, const OrderFunction& omega, const RVec& lambda) {
    const auto& W = omega.weyl();
    return D.find(sign_vector(W.affine(), D.hyperplanes, W.alcove_point(omega.witness(lambda))));
}

std::vector<SignVector> grid_sign_vectors(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes,
                                          int radius, int denominator) {
    const int r = S.rank();
    const int span = radius * denominator;
    std::set<SignVector> out;
    std::vector<int> k(r, -span);
    while (true) {
        RVec x(r);
        for (int j = 0; j < r; ++j) {
            x[j] = Rational(k[j], denominator);
            x[j].canonicalize();
        }
        bool on_wall = false;
        SignVector s;
        for (const auto& a : hyperplanes) {
            Rational v = S.eval(a, x);
            if (v == 0) {
                on_wall = true;
                break;
            }
            s.push_back(v > 0 ? 1 : -1);
        }
        if (!on_wall) out.insert(s);
        int j = 0;
        while (j < r && k[j] == span) k[j++] = -span;
        if (j == r) break;
        ++k[j];
    }
    return {out.begin(), out.end()};
}

IVec clans_of_gamma_alcoves(const ClanDecomposition& D, const AffineWeyl& W, const RVec& gamma) {
    std::set<int> out;
    for (int w = 0; w < W.finite().size(); ++w) {
        AffElem g = W.compose(W.translation(gamma), W.finite_elem(w));
        out.insert(D.find(sign_vector(W.affine(), D.hyperplanes, W.alcove_point(g))));
    }
    return {out.begin(), out.end()};
}

std::string clan_label(const AffineWeyl& W, const ClanDecomposition& D, int clan) {
    const auto& s = D.clans[clan].signs;
    const auto& H = D.hyperplanes;
    if (W.rank() == 1 && H.size() == 2 && H[0] == AffineRoot{0, 0} && H[1] == AffineRoot{1, 1}) {
        if (s[0] < 0) return "C-";
        return s[1] < 0 ? "C+" : "C0";
    }
    std::string out;
    for (int v : s) out += v > 0 ? '+' : '-';
    return out.empty() ? "(whole space)" : out;
}

}  // namespace qdha
