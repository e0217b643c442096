#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qdha/bqha.hpp"
#include "qdha/clans.hpp"
#include "qdha/qdha.hpp"

namespace qdha {

// X^gamma w X^{-gamma}.
AffElem pregamma_element(const AffineWeyl& W, const RVec& gamma, int w);
// The weights X^gamma u lambda0, one per orbit point, in orbit order.
std::vector<RVec> e_gamma(const BOrderFunction& Omega, const RVec& gamma);

// Whether the stabiliser of every orbit point fixes u lambda0 for its representative u, which is
// what makes the section equivariant.
bool section_is_equivariant(const BOrderFunction& Omega);

// Both algebras for one choice of gamma, with Omega the integral of omega.
class KzContext {
public:
    KzContext(const OrderFunction& omega, RVec gamma);
    KzContext(const KzContext&) = delete;
    KzContext& operator=(const KzContext&) = delete;

    const OrderFunction& omega() const { return *omega_; }
    const AffineWeyl& weyl() const { return omega_->weyl(); }
    const RVec& gamma() const { return gamma_; }
    const BOrderFunction& Omega() const { return Omega_; }
    const QdhaAlgebra& A() const { return A_; }
    const BqhaAlgebra& B() const { return B_; }
    int orbit_size() const { return Omega_.orbit_size(); }
    // The weight of gamma-section of orbit point i.
    const RVec& section(int i) const { return sections_[i]; }
    const std::vector<RVec>& sections() const { return sections_; }

    // sigma_alpha e(section(i)) for a finite simple letter.
    RatOperator sigma(int letter, int i) const;
    // sigma along the canonical word of w, the rightmost letter acting first.
    RatOperator sigma_word(int w, int i) const;
    // The relabelling f e(ell) -> f e(section) of a B-side operator.
    RatOperator image(const RatOperator& x) const;
    RatOperator idempotent() const;

private:
    const OrderFunction* omega_;
    RVec gamma_;
    BOrderFunction Omega_;
    QdhaAlgebra A_;
    BqhaAlgebra B_;
    std::vector<RVec> sections_;
};

struct GeneratorImage {
    int letter = 0;
    int source = 0;
    int omega_value = 0;
    // Grading of tau_alpha e(ell) by the single rule and by the symmetric rule, and the grading of
    // the A-side basis element at the leading term of sigma.
    int degree_single = 0;
    int degree_symmetric = 0;
    int degree_a = 0;
    long leading_length = 0;
    std::string normal_form;
};

struct IsoReport {
    std::vector<GeneratorImage> generators;
    std::vector<std::string> discrepancies;
    // Leading coefficient of sigma_w e(section(i)) at the gamma-conjugate of w, indexed by i * |W| + w.
    std::vector<Rational> scalars;
    long products_checked = 0;
    bool ok() const { return discrepancies.empty(); }
};
// Checks membership of the generator images, the basis correspondence sigma_w <-> tau_{gamma w}
// and the agreement of normal forms for every product of at most word_bound generators, where a
// generator is tau_alpha or a monomial of degree 1..degree.
IsoReport iso_check(const KzContext& K, int degree, int word_bound);

struct ProductFormula {
    int w = 0;
    int source = 0;
    RatFunc lhs, rhs;
    Rational epsilon;
    bool ok = false;
};
// prod over b in S+ cap (gamma w)^{-1} S- of (-db)^{omega_lambda(b)} against prod over reduced
// beta in R+ cap w^{-1} R- of (-beta)^{Omega_ell(beta)}; ok when the ratio is +-2^k.
ProductFormula product_formula_check(const KzContext& K, int w, int i);
bool is_signed_power_of_two(const Rational& q);

struct GammaChangeReport {
    long checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
// The intertwiner sum over orbit points of phi_{X^{gamma - gamma'}} e(section'), with the
// identities phi phi' = e_gamma, phi' phi = e_gamma' and the conjugation of the generators.
RatOperator gamma_intertwiner(const KzContext& to, const KzContext& from);
GammaChangeReport gamma_change(const OrderFunction& omega, const RVec& gamma, const RVec& gamma2);

// gamma = -(M 2rho^vee + K c sum over beta != alpha of the fundamental coweights), with c the
// smallest positive integer putting the sum in the coroot lattice.
RVec skewed_gamma(const OrderFunction& omega, int letter, int K);
// l(gamma s_alpha) <= l(gamma w) for every w != 1.
bool length_inequality(const AffineWeyl& W, const RVec& gamma, int letter);

// Graded dimension per weight, summed over degrees.
using Character = std::function<long(const RVec&)>;
// 1 on weights whose clan is listed.
Character clan_character(const ClanDecomposition& D, const OrderFunction& omega, const IVec& clans);

struct GrowthReport {
    std::vector<long> counts;  // counts[n] for n = 0..n_max
    double slope = 0;
    // Rounded slope, -1 for the zero character.
    int exponent = -1;
};
// Sum of the character over orbit points at distance <= n, with the least squares slope of
// log count against log n over [n_max / 2, n_max].
GrowthReport gk_growth(const OrderFunction& omega, const Character& ch, int n_max);

struct KernelReport {
    bool generic_vanishing = false;  // (ii)
    bool confined = false;           // (iii)
    bool small_growth = false;       // (iv)
    bool in_kernel = false;
    bool consistent = false;
    long truncation = 0;  // sum of the character over the weights of e_gamma
    GrowthReport growth;
    Rational bound_half, bound_full;
};
// Throws UsageError when the character is not clan-constant over the window.
KernelReport kernel_clan_test(const OrderFunction& omega, const ClanDecomposition& D, const RVec& gamma,
                              const Character& ch, int n_max);

}  // namespace qdha
