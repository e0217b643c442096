#pragma once

#include <random>
#include <vector>

#include "qdha/operator.hpp"
#include "qdha/orderfun.hpp"

namespace qdha {

// The algebra B^Omega on the sum of Pol_ell over the finite orbit. Weights are the canonical
// orbit points of the BOrderFunction and group elements carry no translation part.
class BqhaAlgebra : public OperatorAlgebra {
public:
    explicit BqhaAlgebra(const BOrderFunction& Omega);

    const BOrderFunction& omega() const { return *Omega_; }
    const AffineWeyl& weyl() const { return Omega_->weyl(); }
    const RVec& point(int i) const { return Omega_->point(i); }
    int index(const RVec& weight) const;

    const FiniteWeyl& finite() const override { return weyl().finite(); }
    int nvars() const override { return weyl().rank(); }
    int num_letters() const override { return weyl().rank(); }
    AffElem letter_element(int letter) const override { return element(finite().simple(letter)); }
    AffElem compose_elements(const AffElem& a, const AffElem& b) const override { return element(finite().mul(a.w, b.w)); }
    RVec act(const AffElem& g, const RVec& weight) const override;
    AffElem element_for(const OpKey& key) const override;
    long length(const AffElem& g) const override { return finite().length(g.w); }
    IVec word(const AffElem& g) const override { return finite().word(g.w); }
    // tau_alpha e(ell): alpha^{-1}(s - 1) when Omega_ell(alpha) = -1, alpha^{Omega_ell(alpha)} s otherwise.
    RatOperator generator(int letter, const RVec& weight) const override;
    RatFunc top_coefficient(const AffElem& g, const RVec& src) const override;

    AffElem element(int w) const { return weyl().finite_elem(w); }
    RatOperator tau(int letter, const RVec& weight) const { return generator(letter, weight); }
    // Sum of Omega_ell(alpha) along the canonical word of w.
    int degree_single(int w, const RVec& src) const;
    // Sum of Omega_ell(alpha) + Omega_{s ell}(alpha) along the canonical word of w.
    int degree_symmetric(int w, const RVec& src) const;

private:
    const BOrderFunction* Omega_;
    std::vector<Poly> root_polys_;
    // Omega at a root of either sign, through its positive representative.
    int value(int i, int root) const;
};

// The reflection subgroup W_ell of the finite Weyl group with its Coxeter data.
struct StabilizerCoxeter {
    IVec group;           // elements, ascending
    IVec positive_roots;  // positive non-divisible roots whose reflection lies in the group
    IVec simple_roots;
    int longest = 0;
    // Roots b1, ..., bk with longest = s_{b1} ... s_{bk}.
    IVec longest_word;
};
// Throws InternalError when the stabiliser is not generated by its reflections. With
// alternative set the longest word peels the largest simple root first instead of the smallest.
StabilizerCoxeter stabilizer_coxeter(const BOrderFunction& Omega, int i, bool alternative = false);
// d_{b1} o ... o d_{bk} (f), with d_b f = (s_b f - f) / b.
Poly demazure_composition(const FiniteWeyl& W, const IVec& roots, const Poly& f);

// The Frobenius form: coefficient of tau_{w0} e(ell), pushed through the Demazure composition of
// the stabiliser of the target weight w0 ell and transported to Z by the orbit representative.
Poly frobenius_trace(const BqhaAlgebra& B, const NormalForm& nf);
Poly frobenius_trace(const BqhaAlgebra& B, const RatOperator& x);
// The anti-involution fixing f e(ell) and sending tau_alpha e(ell) to tau_alpha e(s_alpha ell).
RatOperator anti_involution(const BqhaAlgebra& B, const NormalForm& nf);
// (-1)^N for N the number of positive roots of the stabiliser. The form tr(x iota(y)) is symmetric
// up to this sign: tr(x iota(y)) = sign * tr(y iota(x)).
int involution_sign(const BOrderFunction& Omega);

struct GramElement {
    Poly monomial;
    int w = 0;
    int source = 0;  // orbit index
};
// Spanning set {m tau_w e(ell) : deg m <= d}.
std::vector<GramElement> gram_spanning_set(const BqhaAlgebra& B, int degree);
// Entries tr(x_i x_j) as elements of Z.
std::vector<std::vector<Poly>> gram_matrix(const BqhaAlgebra& B, const std::vector<GramElement>& basis);

struct GramReport {
    long size = 0;
    // Rank of the Gram matrix evaluated at a random rational point.
    int rank = 0;
    // Dimension over Frac Z of the span of the spanning set, by the same evaluation.
    int expected_rank = 0;
    RVec point;
};
GramReport gram_rank(const BqhaAlgebra& B, int degree, std::mt19937& rng);

}  // namespace qdha
