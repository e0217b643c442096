#include "qdha/operator.hpp"

#include <sstream>

#include "qdha/errors.hpp"

namespace qdha {

RatOperator RatOperator::idempotent(int nvars, const RVec& weight) {
    RatOperator x(nvars);
    x.entries_[{weight, weight, 0}] = RatFunc::constant(nvars, 1);
    return x;
}

RatOperator RatOperator::multiplication(const Poly& f, const RVec& weight) {
    RatOperator x(f.nvars());
    if (!f.is_zero()) x.entries_[{weight, weight, 0}] = RatFunc(f);
    return x;
}

void RatOperator::accumulate(const OpKey& key, const RatFunc& r) {
    if (r.is_zero()) return;
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, r);
        return;
    }
    it->second += r;
    if (it->second.is_zero()) entries_.erase(it);
}

RatFunc RatOperator::coefficient(const OpKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? RatFunc(n_) : it->second;
}

RatOperator RatOperator::operator-() const {
    RatOperator x(n_);
    for (const auto& [k, r] : entries_) x.entries_.emplace(k, -r);
    return x;
}

RatOperator& RatOperator::operator+=(const RatOperator& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [k, r] : o.entries_) accumulate(k, r);
    return *this;
}

RatOperator& RatOperator::operator-=(const RatOperator& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [k, r] : o.entries_) accumulate(k, -r);
    return *this;
}

RatOperator RatOperator::left_multiply(const RatFunc& f) const {
    RatOperator x(n_);
    if (f.is_zero()) return x;
    for (const auto& [k, r] : entries_) x.entries_.emplace(k, f * r);
    return x;
}

RatOperator RatOperator::scaled(const Rational& c) const {
    return left_multiply(RatFunc::constant(n_, c));
}

RatOperator RatOperator::restrict_source(const RVec& src) const {
    RatOperator x(n_);
    for (const auto& [k, r] : entries_)
        if (k.src == src) x.entries_.emplace(k, r);
    return x;
}

std::string RatOperator::to_string(const FiniteWeyl& W) const {
    if (entries_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, r] : entries_) {
        if (!first) out << " + ";
        first = false;
        out << "[" << qdha::to_string(k.tgt) << " <- " << qdha::to_string(k.src) << "] " << r.to_string() << " * ";
        const auto& word = W.word(k.twist);
        if (word.empty()) out << "e";
        for (int i : word) out << "s" << i + 1;
    }
    return out.str();
}

RatOperator compose(const FiniteWeyl& W, const RatOperator& x, const RatOperator& y) {
    RatOperator out(std::max(x.nvars(), y.nvars()));
    const auto& xe = x.entries();
    for (const auto& [k2, r2] : y.entries()) {
        OpKey lo{k2.tgt, {}, -1};
        for (auto it = xe.lower_bound(lo); it != xe.end() && it->first.src == k2.tgt; ++it) {
            const auto& [k1, r1] = *it;
            out.accumulate({k2.src, k1.tgt, W.mul(k1.twist, k2.twist)}, r1 * weyl_act(W, k1.twist, r2));
        }
    }
    return out;
}

std::map<RVec, RatFunc> apply(const FiniteWeyl& W, const RatOperator& x, const RVec& src, const Poly& f) {
    std::map<RVec, RatFunc> out;
    for (const auto& [k, r] : x.entries()) {
        if (k.src != src) continue;
        RatFunc v = r * weyl_act(W, k.twist, f);
        auto it = out.find(k.tgt);
        if (it == out.end()) {
            if (!v.is_zero()) out.emplace(k.tgt, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

RatOperator OperatorAlgebra::word_operator(const IVec& letters, const RVec& src) const {
    RatOperator x = idempotent(src);
    RVec cur = src;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        x = compose(generator(*it, cur), x);
        cur = act(letter_element(*it), cur);
    }
    return x;
}

RatOperator OperatorAlgebra::basis_operator(const AffElem& g, const RVec& src) const {
    auto key = std::make_pair(src, g);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    IVec w = word(g);
    RatOperator x;
    if (w.empty()) {
        x = idempotent(src);
    } else {
        AffElem tail = compose_elements(letter_element(w.front()), g);
        RatOperator rest = basis_operator(tail, src);
        x = compose(generator(w.front(), act(tail, src)), rest);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto res = cache_.emplace(key, std::make_shared<const RatOperator>(std::move(x)));
    return *res.first->second;
}

NormalForm OperatorAlgebra::normal_form(const RatOperator& x) const {
    NormalForm nf;
    RatOperator rem = x;
    long steps = 0;
    while (!rem.is_zero()) {
        if (++steps > step_limit_) throw NonTerminating("normal form peel exceeded its step limit");
        const OpKey* best = nullptr;
        AffElem best_g;
        long best_len = -1;
        for (const auto& [k, r] : rem.entries()) {
            AffElem g = element_for(k);
            long l = length(g);
            if (l > best_len) {
                best_len = l;
                best = &k;
                best_g = g;
            }
        }
        const OpKey key = *best;
        const RatFunc r = rem.entries().at(key);
        RatFunc top = top_coefficient(best_g, key.src);
        RatOperator basis = basis_operator(best_g, key.src);
        if (basis.coefficient(key) != top)
            throw InternalError("leading coefficient of a basis operator disagrees with the inversion product");
        RatFunc f = r / top;
        if (!f.is_polynomial())
            throw NotInAlgebra("coefficient " + f.to_string() + " at length " + std::to_string(best_len) +
                               " is not polynomial");
        Poly p = f.as_poly();
        auto term = std::make_pair(key.src, best_g);
        auto it = nf.terms.find(term);
        if (it == nf.terms.end()) {
            nf.terms.emplace(term, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) nf.terms.erase(it);
        }
        rem -= basis.left_multiply(f);
        if (rem.entries().count(key)) throw InternalError("normal form peel did not clear its leading entry");
    }
    return nf;
}

RatOperator OperatorAlgebra::reconstruct(const NormalForm& nf) const {
    RatOperator x(nvars());
    for (const auto& [term, f] : nf.terms) x += basis_operator(term.second, term.first).left_multiply(RatFunc(f));
    return x;
}

long OperatorAlgebra::filtration_degree(const NormalForm& nf) const {
    long d = kMinusInfinity;
    for (const auto& [term, f] : nf.terms) d = std::max(d, length(term.second));
    return d;
}

}  // namespace qdha
