#pragma once

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qdha/poly.hpp"
#include "qdha/weyl.hpp"

namespace qdha {

// Entry index: source weight, target weight and finite twist u.
struct OpKey {
    RVec src, tgt;
    int twist = 0;
    bool operator<(const OpKey& o) const {
        if (src != o.src) return src < o.src;
        if (tgt != o.tgt) return tgt < o.tgt;
        return twist < o.twist;
    }
    bool operator==(const OpKey& o) const { return twist == o.twist && src == o.src && tgt == o.tgt; }
};

// Element of the rational matrix algebra: a finite sum of maps Pol_src -> Pol_tgt, f -> r u(f).
class RatOperator {
public:
    RatOperator() = default;
    explicit RatOperator(int nvars) : n_(nvars) {}
    static RatOperator idempotent(int nvars, const RVec& weight);
    // f e(weight).
    static RatOperator multiplication(const Poly& f, const RVec& weight);

    int nvars() const { return n_; }
    const std::map<OpKey, RatFunc>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    // Adds r to the entry at key, dropping it when the sum vanishes.
    void accumulate(const OpKey& key, const RatFunc& r);
    RatFunc coefficient(const OpKey& key) const;

    RatOperator operator-() const;
    RatOperator& operator+=(const RatOperator& o);
    RatOperator& operator-=(const RatOperator& o);
    friend RatOperator operator+(RatOperator a, const RatOperator& b) { return a += b; }
    friend RatOperator operator-(RatOperator a, const RatOperator& b) { return a -= b; }
    bool operator==(const RatOperator& o) const { return entries_ == o.entries_; }
    bool operator!=(const RatOperator& o) const { return !(*this == o); }

    // f x, with f acting on every target.
    RatOperator left_multiply(const RatFunc& f) const;
    RatOperator scaled(const Rational& c) const;
    // Restriction to entries with the given source (x e(src)).
    RatOperator restrict_source(const RVec& src) const;

    std::string to_string(const FiniteWeyl& W) const;

private:
    int n_ = 0;
    std::map<OpKey, RatFunc> entries_;
};

// x o y; entries combine as (r1, u1) o (r2, u2) = (r1 u1(r2), u1 u2) when the weights match.
RatOperator compose(const FiniteWeyl& W, const RatOperator& x, const RatOperator& y);
// x applied to f placed in Pol_src; result keyed by target weight.
std::map<RVec, RatFunc> apply(const FiniteWeyl& W, const RatOperator& x, const RVec& src, const Poly& f);

// Sum of f_w tau_w e(src) over (src, w).
struct NormalForm {
    std::map<std::pair<RVec, AffElem>, Poly> terms;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const NormalForm& o) const { return terms == o.terms; }
};

constexpr long kMinusInfinity = LONG_MIN;

// Shared machinery for algebras generated by polynomials, weight idempotents and tau-operators
// indexed by Coxeter letters. Elements are stored as AffElem (finite part only on the B side).
class OperatorAlgebra {
public:
    virtual ~OperatorAlgebra() = default;

    virtual const FiniteWeyl& finite() const = 0;
    virtual int nvars() const = 0;
    virtual int num_letters() const = 0;
    virtual AffElem letter_element(int letter) const = 0;
    virtual AffElem compose_elements(const AffElem& a, const AffElem& b) const = 0;
    virtual RVec act(const AffElem& g, const RVec& weight) const = 0;
    // The group element carried by an entry.
    virtual AffElem element_for(const OpKey& key) const = 0;
    virtual long length(const AffElem& g) const = 0;
    // Canonical reduced word [i1, ..., il] with g = s_{i1} ... s_{il}.
    virtual IVec word(const AffElem& g) const = 0;
    virtual RatOperator generator(int letter, const RVec& weight) const = 0;
    // Leading coefficient of tau_g e(src): g(prod over inversions b of (-b)^{order at b}).
    virtual RatFunc top_coefficient(const AffElem& g, const RVec& src) const = 0;

    RatOperator idempotent(const RVec& weight) const { return RatOperator::idempotent(nvars(), weight); }
    RatOperator compose(const RatOperator& x, const RatOperator& y) const { return qdha::compose(finite(), x, y); }
    // tau_{i1} ... tau_{il} e(src), the rightmost letter acting first.
    RatOperator word_operator(const IVec& letters, const RVec& src) const;
    // tau_g e(src) for the canonical reduced word, cached.
    RatOperator basis_operator(const AffElem& g, const RVec& src) const;

    // Throws NotInAlgebra when some coefficient is not polynomial, NonTerminating past the step guard.
    NormalForm normal_form(const RatOperator& x) const;
    RatOperator reconstruct(const NormalForm& nf) const;
    // Max length over the support, kMinusInfinity for zero.
    long filtration_degree(const NormalForm& nf) const;

    void set_step_limit(long steps) { step_limit_ = steps; }

private:
    long step_limit_ = 200000;
    mutable std::mutex mu_;
    mutable std::map<std::pair<RVec, AffElem>, std::shared_ptr<const RatOperator>> cache_;
};

}  // namespace qdha
