#include "qdha/orderfun.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qdha/errors.hpp"

namespace qdha {

void validate_order_function(const AffineWeyl& W, const RVec& base, const std::map<AffineRoot, int>& support) {
    const auto& S = W.affine();
    if (static_cast<int>(base.size()) != W.rank()) throw InvalidParameter("base point has the wrong dimension");
    for (const auto& [a, v] : support) {
        if (!S.in_S(a)) throw InvalidParameter("order function supported outside S: " + S.to_string(a));
        if (v < -1) throw InvalidParameter("order function value below -1 at " + S.to_string(a));
        if (v == -1 && S.eval(a, base) != 0)
            throw InvalidParameter("value -1 off the wall at " + S.to_string(a));
    }
    for (const auto& g : W.stabilizer(base)) {
        for (const auto& [a, v] : support) {
            AffineRoot b = W.act_root(g, a);
            auto it = support.find(b);
            int vb = it == support.end() ? 0 : it->second;
            if (vb != v) throw InvalidParameter("order function is not invariant under the stabiliser at " + S.to_string(a));
        }
    }
}

OrderFunction::OrderFunction(const AffineWeyl& W, RVec base, std::map<AffineRoot, int> support)
    : W_(&W), base_(std::move(base)), cache_(std::make_shared<Cache>()) {
    for (const auto& [a, v] : support)
        if (v != 0) support_[a] = v;
    validate_order_function(W, base_, support_);
    for (const auto& [a, v] : support_) max_level_ = std::max<int>(max_level_, static_cast<int>(std::labs(a.level)));
}

int OrderFunction::tilde(const AffineRoot& a) const {
    auto it = support_.find(a);
    return it == support_.end() ? 0 : it->second;
}

const std::pair<AffElem, AffElem>* OrderFunction::lookup(const RVec& lambda) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->witnesses.find(lambda);
    if (it != cache_->witnesses.end()) return &it->second;
    if (cache_->misses.count(lambda)) return nullptr;
    auto g = W_->witness(base_, lambda);
    if (!g) {
        cache_->misses[lambda] = true;
        return nullptr;
    }
    auto res = cache_->witnesses.emplace(lambda, std::make_pair(*g, W_->inverse(*g)));
    return &res.first->second;
}

bool OrderFunction::in_orbit(const RVec& lambda) const { return lookup(lambda) != nullptr; }

const AffElem& OrderFunction::witness(const RVec& lambda) const {
    const auto* p = lookup(lambda);
    if (!p) throw InvalidParameter("weight " + to_string(lambda) + " is not in the orbit of " + to_string(base_));
    return p->first;
}

int OrderFunction::at(const RVec& lambda, const AffineRoot& a) const {
    const auto* p = lookup(lambda);
    if (!p) throw InvalidParameter("weight " + to_string(lambda) + " is not in the orbit of " + to_string(base_));
    if (support_.empty()) return 0;
    return tilde(W_->act_root(p->second, a));
}

int OrderFunction::at_with(const AffElem& g, const AffineRoot& a) const {
    if (support_.empty()) return 0;
    return tilde(W_->act_root(W_->inverse(g), a));
}

int OrderFunction::tau_degree(int letter, const RVec& lambda) const {
    AffineRoot a = W_->affine().simple(letter);
    RVec target = W_->act_point(W_->simple_reflection(letter), lambda);
    return at(lambda, a) + at(target, a);
}

std::vector<RVec> BOrderFunction::orbit_points(const AffineWeyl& W, const RVec& base) {
    const auto& L = W.roots().coroot_lattice();
    std::vector<RVec> out;
    std::map<RVec, int> seen;
    for (int u = 0; u < W.finite().size(); ++u) {
        RVec p = L.reduce(W.finite().act_point(u, base));
        if (seen.emplace(p, static_cast<int>(out.size())).second) out.push_back(p);
    }
    return out;
}

BOrderFunction::BOrderFunction(const AffineWeyl& W, RVec base, std::vector<IVec> values)
    : W_(&W), base_(std::move(base)), values_(std::move(values)) {
    const auto& L = W.roots().coroot_lattice();
    const auto& F = W.finite();
    orbit_ = orbit_points(W, base_);
    for (int i = 0; i < orbit_size(); ++i) index_[orbit_[i]] = i;
    reps_.assign(orbit_size(), -1);
    for (int u = 0; u < F.size(); ++u) {
        int i = index_.at(L.reduce(F.act_point(u, base_)));
        if (reps_[i] < 0) reps_[i] = u;
    }
    action_.assign(orbit_size(), IVec(F.size()));
    for (int i = 0; i < orbit_size(); ++i)
        for (int u = 0; u < F.size(); ++u) action_[i][u] = index_.at(L.reduce(F.act_point(u, orbit_[i])));
    if (static_cast<int>(values_.size()) != orbit_size()) throw InvalidParameter("B order function table has the wrong size");
    for (auto& row : values_)
        if (static_cast<int>(row.size()) != W.roots().num_positive())
            throw InvalidParameter("B order function row has the wrong size");
}

int BOrderFunction::index(const RVec& lambda) const {
    auto it = index_.find(W_->roots().coroot_lattice().reduce(lambda));
    return it == index_.end() ? -1 : it->second;
}

IVec BOrderFunction::stabilizer(int i) const {
    IVec out;
    for (int u = 0; u < W_->finite().size(); ++u)
        if (action_[i][u] == i) out.push_back(u);
    return out;
}

void validate_b_order_function(const BOrderFunction& Omega) {
    const auto& R = Omega.weyl().roots();
    const auto& F = Omega.weyl().finite();
    for (int i = 0; i < Omega.orbit_size(); ++i)
        for (int b = 0; b < R.num_positive(); ++b) {
            if (R.is_divisible(b)) continue;
            int v = Omega.at(i, b);
            if (v < -1) throw InvalidParameter("B order function value below -1");
            if (v == -1) {
                Rational x = R.eval(b, Omega.point(i));
                bool ok = is_integer(x) || (R.twice(b) >= 0 && is_integer(2 * x));
                if (!ok) throw InvalidParameter("B order function takes -1 away from Y^alpha = 1");
            }
            for (int w = 0; w < F.size(); ++w) {
                int wb = F.act(w, b);
                if (!R.is_positive(wb)) continue;
                if (Omega.at(Omega.act(w, i), wb) != v) throw InvalidParameter("B order function is not W-equivariant");
            }
        }
}

IVec norm_classes(const FiniteRootSystem& R) {
    std::vector<Rational> norms;
    for (int b = 0; b < R.num_roots(); ++b) norms.push_back(R.inner(b, b));
    std::vector<Rational> sorted = norms;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    IVec cls(R.num_roots());
    for (int b = 0; b < R.num_roots(); ++b)
        cls[b] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), norms[b]) - sorted.begin());
    return cls;
}

int num_norm_classes(const FiniteRootSystem& R) {
    IVec c = norm_classes(R);
    return *std::max_element(c.begin(), c.end()) + 1;
}

OrderFunction random_order_function(const AffineWeyl& W, const RVec& base, std::mt19937& rng, int max_level,
                                    const IVec& values) {
    const auto& R = W.roots();
    const auto& S = W.affine();
    const auto stab = W.stabilizer(base);
    IVec on_wall, off_wall;
    for (int v : values) {
        on_wall.push_back(v);
        if (v != -1) off_wall.push_back(v);
    }
    std::map<AffineRoot, int> support;
    std::set<AffineRoot> done;
    for (int b = 0; b < R.num_roots(); ++b)
        for (long k = -max_level; k <= max_level; ++k) {
            AffineRoot a{b, k};
            if (!S.in_S(a) || done.count(a)) continue;
            std::set<AffineRoot> orbit;
            bool inside = true;
            for (const auto& g : stab) {
                AffineRoot c = W.act_root(g, a);
                orbit.insert(c);
                if (std::labs(c.level) > max_level) inside = false;
            }
            done.insert(orbit.begin(), orbit.end());
            const IVec& pool = S.eval(a, base) == 0 ? on_wall : off_wall;
            int v = pool.empty() ? 0 : pool[rng() % pool.size()];
            if (!inside || v == 0) continue;
            for (const auto& c : orbit) support[c] = v;
        }
    return OrderFunction(W, base, support);
}

OrderFunction from_ddaha_H(const AffineWeyl& W, const RVec& h, const RVec& lambda0, int window) {
    const auto& R = W.roots();
    const auto& S = W.affine();
    IVec cls = norm_classes(R);
    if (static_cast<int>(h.size()) != num_norm_classes(R)) throw InvalidParameter("one parameter per root length is required");
    if (window < 0) {
        Rational reach = 0;
        for (int b = 0; b < R.num_roots(); ++b) reach = std::max(reach, Rational(abs(R.eval(b, lambda0))));
        Rational hmax = 0;
        for (const auto& x : h) hmax = std::max(hmax, Rational(abs(x)));
        window = static_cast<int>(to_long(floor_of(reach + hmax))) + 2;
    }
    std::map<AffineRoot, int> support;
    for (int b = 0; b < R.num_roots(); ++b)
        for (long k = -window; k <= window; ++k) {
            AffineRoot a{b, k};
            if (!S.in_S(a)) continue;
            Rational z = S.eval(a, lambda0);
            const Rational& ha = h[cls[b]];
            int v = 0;
            if (z == ha && ha != 0) v = 1;
            if (z == 0 && ha != 0) v = -1;
            if (v == 0) continue;
            if (std::labs(k) == window) throw WindowTooSmall("order function support reaches the level window");
            support[a] = v;
        }
    return OrderFunction(W, lambda0, support);
}

BOrderFunction from_ddaha_K(const AffineWeyl& W, const RVec& h, const RVec& lambda0) {
    const auto& R = W.roots();
    IVec cls = norm_classes(R);
    if (static_cast<int>(h.size()) != num_norm_classes(R)) throw InvalidParameter("one parameter per root length is required");
    auto congruent = [](const Rational& x, const Rational& y) { return is_integer(x - y); };
    auto points = BOrderFunction::orbit_points(W, lambda0);
    std::vector<IVec> values(points.size(), IVec(R.num_positive(), 0));
    for (size_t i = 0; i < points.size(); ++i)
        for (int b = 0; b < R.num_positive(); ++b) {
            if (R.is_divisible(b)) continue;
            Rational x = R.eval(b, points[i]);
            const Rational& ha = h[cls[b]];
            int v = (congruent(x, ha) ? 1 : 0) - (congruent(x, 0) ? 1 : 0);
            if (R.twice(b) >= 0) {
                const Rational& htheta = h[cls[R.twice(b)]];
                v += congruent(x, (htheta + 1) / 2) ? 1 : 0;
                v -= congruent(x, Rational(1, 2)) ? 1 : 0;
            }
            values[i][b] = v;
        }
    return BOrderFunction(W, lambda0, values);
}

GammaChoice choose_gamma(const OrderFunction& omega) {
    GammaChoice g;
    g.margin = omega.max_level() + 1;
    int k = (g.margin + 1) / 2;
    g.gamma = scale(Rational(-k), omega.weyl().roots().two_rho_check());
    return g;
}

bool gamma_admissible(const FiniteRootSystem& R, const RVec& gamma, int margin) {
    if (!R.coroot_lattice().contains(gamma)) return false;
    for (int b = 0; b < R.num_positive(); ++b)
        if (R.eval(b, gamma) > -margin) return false;
    return true;
}

RVec pregamma_point(const AffineWeyl& W, const RVec& lambda0, const RVec& gamma, int u) {
    return add(gamma, W.finite().act_point(u, lambda0));
}

RVec pregamma_point(const BOrderFunction& Omega, const RVec& gamma, int i) {
    return pregamma_point(Omega.weyl(), Omega.base(), gamma, Omega.representative(i));
}

int integral_at(const OrderFunction& omega, const RVec& lambda, int alpha) {
    const auto& W = omega.weyl();
    const auto& R = W.roots();
    const long L = omega.max_level();
    if (omega.support().empty()) return 0;
    AffElem ginv = W.inverse(omega.witness(lambda));
    int total = 0;
    auto sum_over = [&](int root, bool odd_only) {
        long shift = W.act_root(ginv, {root, 0}).level;
        long lo = std::max<long>(0, -L - shift), hi = L - shift;
        for (long k = lo; k <= hi; ++k) {
            if (odd_only && k % 2 == 0) continue;
            AffineRoot a{root, k};
            if (!W.affine().in_S(a) || !W.affine().is_positive(a)) continue;
            total += omega.tilde(W.act_root(ginv, a));
        }
    };
    sum_over(alpha, false);
    if (R.twice(alpha) >= 0) sum_over(R.twice(alpha), true);
    return total;
}

BOrderFunction integral(const OrderFunction& omega, const RVec& gamma) {
    const auto& W = omega.weyl();
    const auto& R = W.roots();
    auto points = BOrderFunction::orbit_points(W, omega.base());
    BOrderFunction shape(W, omega.base(), std::vector<IVec>(points.size(), IVec(R.num_positive(), 0)));
    std::vector<IVec> values(points.size(), IVec(R.num_positive(), 0));
    for (int i = 0; i < shape.orbit_size(); ++i) {
        RVec lambda = pregamma_point(shape, gamma, i);
        for (int b = 0; b < R.num_positive(); ++b)
            if (!R.is_divisible(b)) values[i][b] = integral_at(omega, lambda, b);
    }
    return BOrderFunction(W, omega.base(), values);
}

}  // namespace qdha
