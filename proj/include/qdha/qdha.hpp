#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdha/operator.hpp"
#include "qdha/orderfun.hpp"

namespace qdha {

// The algebra A^omega acting on the sum of Pol_lambda over the orbit of the base point.
class QdhaAlgebra : public OperatorAlgebra {
public:
    explicit QdhaAlgebra(const OrderFunction& omega);

    const OrderFunction& omega() const { return *omega_; }
    const AffineWeyl& weyl() const { return omega_->weyl(); }

    const FiniteWeyl& finite() const override { return weyl().finite(); }
    int nvars() const override { return weyl().rank(); }
    int num_letters() const override { return weyl().num_letters(); }
    AffElem letter_element(int letter) const override { return weyl().simple_reflection(letter); }
    AffElem compose_elements(const AffElem& a, const AffElem& b) const override { return weyl().compose(a, b); }
    RVec act(const AffElem& g, const RVec& weight) const override { return weyl().act_point(g, weight); }
    AffElem element_for(const OpKey& key) const override;
    long length(const AffElem& g) const override { return weyl().length(g); }
    IVec word(const AffElem& g) const override { return weyl().reduced_word(g); }
    // tau_a e(lambda): (da)^{-1}(s - 1) when omega_lambda(a) = -1, (da)^{omega_lambda(a)} s otherwise.
    RatOperator generator(int letter, const RVec& weight) const override;
    RatFunc top_coefficient(const AffElem& g, const RVec& src) const override;

    RatOperator tau(int letter, const RVec& weight) const { return generator(letter, weight); }
    // The intertwiner: s when omega_lambda(a) = -1, tau_a otherwise.
    RatOperator phi(int letter, const RVec& weight) const;
    // phi along the canonical reduced word of g.
    RatOperator phi_element(const AffElem& g, const RVec& src) const;
    // Grading of tau_g e(src): sum of omega_mu(a) + omega_{s_a mu}(a) along the canonical word.
    int degree(const AffElem& g, const RVec& src) const;

    // f tau_word e(lambda) - tau_word w^{-1}(f) e(lambda) in normal form.
    NormalForm commutation_defect(const Poly& f, const IVec& letters, const RVec& lambda) const;
    // Filtration degree of the difference of the two alternating words of length m_ab at lambda.
    // Throws UsageError when m_ab is infinite.
    long braid_defect(int a, int b, const RVec& lambda) const;

    // (dg)(f) e(lambda) for f invariant under the stabiliser of the base point.
    RatOperator centre_element(const Poly& f, const RVec& lambda) const;
    // Averages of monomials of degree 1..max_degree over the stabiliser, without repeats.
    std::vector<Poly> centre_generators(int max_degree) const;
    // Checks f tau_a e(lambda) = tau_a f e(lambda) for every letter.
    bool centre_commutes(const Poly& f, const RVec& lambda) const;

private:
    const OrderFunction* omega_;
    std::vector<Poly> root_polys_;
};

// Finite Weyl elements fixing the base point (finite parts of its stabiliser).
IVec finite_stabilizer(const AffineWeyl& W, const RVec& point);
// Reynolds average of f over the finite parts of a group.
Poly average(const FiniteWeyl& W, const IVec& group, const Poly& f);
// All monomials in n variables of total degree <= d, ascending degree.
std::vector<Poly> monomials_up_to(int nvars, int d);

struct ParabolicReport {
    long elements = 0;
    long cosets = 0;
    std::vector<std::string> failures;
};
// Every element g of length <= bound factors as theta(mu) u with lengths adding, and
// tau_theta tau_u e(lambda) has leading term tau_g e(lambda) with coefficient 1.
ParabolicReport parabolic_decomposition_check(const QdhaAlgebra& A, const RVec& lambda, int bound);

struct GradedDimension {
    // Coefficients of v^k, k <= max_degree.
    std::map<int, long> free_module;
    std::map<int, long> quotient;
    long basis_size = 0;
};
// Graded dimensions of e(tgt) A e(src) and of its quotient by the augmentation ideal of Z.
GradedDimension graded_dim_hom(const QdhaAlgebra& A, const RVec& src, const RVec& tgt, int max_degree);

}  // namespace qdha
