#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "qdha/weyl.hpp"

namespace qdha {

// Rejects functions taking values below -1, taking -1 off the walls through base, supported on
// affine functions outside S, or failing W_base-invariance. Throws InvalidParameter.
void validate_order_function(const AffineWeyl& W, const RVec& base, const std::map<AffineRoot, int>& support);

// A family of order functions, given by the W_{lambda0}-invariant extension at the base point.
class OrderFunction {
public:
    OrderFunction(const AffineWeyl& W, RVec base, std::map<AffineRoot, int> support);

    const AffineWeyl& weyl() const { return *W_; }
    const RVec& base() const { return base_; }
    const std::map<AffineRoot, int>& support() const { return support_; }
    // The extension at the base point.
    int tilde(const AffineRoot& a) const;
    // Largest |level| in the support (0 for the zero function).
    int max_level() const { return max_level_; }

    // The element X^{lambda - u lambda0} u of minimal length with g lambda0 = lambda.
    // Throws InvalidParameter when lambda is not in the orbit.
    const AffElem& witness(const RVec& lambda) const;
    bool in_orbit(const RVec& lambda) const;
    // omega_lambda(a), also for a outside S+ (the extension).
    int at(const RVec& lambda, const AffineRoot& a) const;
    // omega~(g^{-1} a) for a witness g of some orbit point.
    int at_with(const AffElem& g, const AffineRoot& a) const;
    // deg tau_a e(lambda) = omega_lambda(a) + omega_{s_a lambda}(a).
    int tau_degree(int letter, const RVec& lambda) const;

private:
    const AffineWeyl* W_;
    RVec base_;
    std::map<AffineRoot, int> support_;
    int max_level_ = 0;
    struct Cache {
        std::mutex mu;
        std::map<RVec, std::pair<AffElem, AffElem>> witnesses;  // lambda -> (g, g^{-1})
        std::map<RVec, bool> misses;
    };
    std::shared_ptr<Cache> cache_;
    const std::pair<AffElem, AffElem>* lookup(const RVec& lambda) const;
};

// Family Omega_ell on the finite orbit W_R ell0, ell = exp(lambda) with lambda modulo Q^vee.
class BOrderFunction {
public:
    // values[i][b] for orbit point i and positive root b (entries at divisible roots are ignored).
    BOrderFunction(const AffineWeyl& W, RVec base, std::vector<IVec> values);
    // Orbit points in the order of first appearance along the finite Weyl group table.
    static std::vector<RVec> orbit_points(const AffineWeyl& W, const RVec& base);

    const AffineWeyl& weyl() const { return *W_; }
    const RVec& base() const { return base_; }
    int orbit_size() const { return static_cast<int>(orbit_.size()); }
    const RVec& point(int i) const { return orbit_[i]; }
    const std::vector<RVec>& points() const { return orbit_; }
    // Index of the orbit point congruent to lambda, or -1.
    int index(const RVec& lambda) const;
    // Index of u(ell_i).
    int act(int u, int i) const { return action_[i][u]; }
    // Finite Weyl elements u with u ell_i = ell_i.
    IVec stabilizer(int i) const;
    int at(int i, int positive_root) const { return values_[i][positive_root]; }
    const std::vector<IVec>& values() const { return values_; }
    // A finite Weyl element u (first in table order) with u ell0 = ell_i.
    int representative(int i) const { return reps_[i]; }

private:
    const AffineWeyl* W_;
    RVec base_;
    std::vector<RVec> orbit_;
    std::map<RVec, int> index_;
    std::vector<IVec> action_;
    IVec reps_;
    std::vector<IVec> values_;
};

// Checks conditions (i)-(iii) on a B-side family. Throws InvalidParameter.
void validate_b_order_function(const BOrderFunction& Omega);

// A random valid order function: each stabiliser orbit of affine roots with |level| <= max_level
// gets one value drawn from values (-1 is used only on walls through base).
OrderFunction random_order_function(const AffineWeyl& W, const RVec& base, std::mt19937& rng, int max_level,
                                    const IVec& values);

// Classes of roots by squared length, ascending; parameters h are given per class.
IVec norm_classes(const FiniteRootSystem& R);
int num_norm_classes(const FiniteRootSystem& R);

// omega~(a) = order at z = a(lambda0) of (z - h_a) / z, over |level| <= window (window < 0 picks
// a window containing every root that can vanish or reach h). Throws WindowTooSmall when the
// support touches the window boundary.
OrderFunction from_ddaha_H(const AffineWeyl& W, const RVec& h, const RVec& lambda0, int window = -1);
// Omega_ell(alpha) = order at z = Y^alpha(ell) of (z - v^2)/(z - 1), or of
// (z - v^2)(z + v_theta)/(z^2 - 1) when 2 alpha is a root, by congruences modulo 1.
BOrderFunction from_ddaha_K(const AffineWeyl& W, const RVec& h, const RVec& lambda0);

struct GammaChoice {
    RVec gamma;
    int margin = 1;
};
// M = max |level| + 1 and gamma = -ceil(M/2) * 2 rho^vee.
GammaChoice choose_gamma(const OrderFunction& omega);
// <alpha, gamma> <= -margin for every positive root.
bool gamma_admissible(const FiniteRootSystem& R, const RVec& gamma, int margin);

// X^gamma u lambda0 for the representative u of the orbit point.
RVec pregamma_point(const BOrderFunction& Omega, const RVec& gamma, int i);
RVec pregamma_point(const AffineWeyl& W, const RVec& lambda0, const RVec& gamma, int u);

// Sum of omega_lambda(a) over a in S+ with differential alpha or 2 alpha; integral() evaluates it
// at the gamma-section of every orbit point.
int integral_at(const OrderFunction& omega, const RVec& lambda, int alpha);
BOrderFunction integral(const OrderFunction& omega, const RVec& gamma);

}  // namespace qdha
