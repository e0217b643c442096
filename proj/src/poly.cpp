#include "qdha/poly.hpp"

#include <algorithm>

#include "qdha/errors.hpp"

namespace qdha {

int mono_degree(const Mono& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

bool grlex_less(const Mono& a, const Mono& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
}

namespace {

bool mono_divides(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m{};
    for (int i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return m;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono m{};
    for (int i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return m;
}

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return grlex_less(b.mono, a.mono); }

}  // namespace

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Mono{}, c});
    if (!p.terms_.empty()) p.terms_.back().coef.canonicalize();
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Mono m{};
    m[i] = 1;
    return monomial(nvars, m, 1);
}

Poly Poly::linear(const RVec& coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) {
            Mono m{};
            m[i] = 1;
            p.terms_.push_back({m, coeffs[i]});
            p.terms_.back().coef.canonicalize();
        }
    return p;
}

Poly Poly::monomial(int nvars, const Mono& m, const Rational& c) {
    if (nvars > kMaxVars) throw InvalidParameter("too many polynomial variables");
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({m, c});
    if (!p.terms_.empty()) p.terms_.back().coef.canonicalize();
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0); }

Rational Poly::constant_term() const {
    if (!terms_.empty() && mono_degree(terms_.back().mono) == 0) return terms_.back().coef;
    return 0;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : mono_degree(terms_.front().mono); }

int Poly::low_degree() const { return terms_.empty() ? -1 : mono_degree(terms_.back().mono); }

bool Poly::is_homogeneous() const { return total_degree() == low_degree(); }

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono[var]);
    return d;
}

void Poly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else {
            if (!out.empty() && out.back().coef == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

namespace {

// a + sign * b on sorted term lists.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int sign) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_greater(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_greater(b[j], a[i])) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coef : Rational(-b[j].coef)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
            if (c != 0) out.push_back({a[i].mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (n_ == 0) n_ = o.n_;
    terms_ = merge_terms(terms_, o.terms_, 1);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ == 0) n_ = o.n_;
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p(std::max(a.n_, b.n_));
    if (a.is_zero() || b.is_zero()) return p;
    p.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) p.terms_.push_back({mono_mul(s.mono, t.mono), s.coef * t.coef});
    p.canonicalize();
    return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rational k = c;
    k.canonicalize();
    for (auto& t : terms_) t.coef *= k;
    return *this;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

bool Poly::operator<(const Poly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i].mono != o.terms_[i].mono) return grlex_less(terms_[i].mono, o.terms_[i].mono);
        if (terms_[i].coef != o.terms_[i].coef) return terms_[i].coef < o.terms_[i].coef;
    }
    return terms_.size() < o.terms_.size();
}

Poly Poly::pow(int e) const {
    if (e < 0) throw InvalidParameter("negative polynomial power");
    Poly result = constant(n_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Rational Poly::eval(const RVec& x) const {
    Rational total = 0;
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < t.mono[i]; ++k) v *= x[i];
        total += v;
    }
    return total;
}

Poly Poly::substitute(const std::vector<IVec>& m) const {
    std::vector<Poly> lin(n_);
    for (int i = 0; i < n_; ++i) {
        RVec c(n_);
        for (int j = 0; j < n_; ++j) c[j] = m[i][j];
        lin[i] = linear(c);
    }
    std::vector<std::vector<Poly>> powers(n_);
    auto power = [&](int i, int e) -> const Poly& {
        auto& ps = powers[i];
        if (ps.empty()) ps.push_back(constant(n_, 1));
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * lin[i]);
        return ps[e];
    };
    Poly out(n_);
    for (const auto& t : terms_) {
        Poly term = constant(n_, t.coef);
        for (int i = 0; i < n_; ++i)
            if (t.mono[i]) term *= power(i, t.mono[i]);
        out += term;
    }
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly p = *this;
    Rational c = 1 / terms_.front().coef;
    return p *= c;
}

Poly Poly::homogeneous_part(int d) const {
    Poly p(n_);
    for (const auto& t : terms_)
        if (mono_degree(t.mono) == d) p.terms_.push_back(t);
    return p;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        Rational c = t.coef;
        bool negative = c < 0;
        if (negative) c = -c;
        if (k == 0)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!t.mono[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += n_ == 1 ? std::string("x") : "x" + std::to_string(i + 1);
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty())
            s += qdha::to_string(c);
        else if (c == 1)
            s += mono;
        else
            s += qdha::to_string(c) + "*" + mono;
    }
    return s;
}

bool divide_exact(const Poly& f, const Poly& g, Poly& quotient) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const int n = std::max(f.nvars(), g.nvars());
    quotient = Poly(n);
    if (f.is_zero()) return true;
    if (g.is_constant()) {
        quotient = f * (1 / g.leading().coef);
        return true;
    }
    const auto& lg = g.leading();
    Poly r = f;
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        if (!mono_divides(lg.mono, lr.mono)) return false;
        if (mono_degree(lr.mono) < mono_degree(lg.mono)) return false;
        Poly t = Poly::monomial(n, mono_div(lr.mono, lg.mono), lr.coef / lg.coef);
        quotient += t;
        r -= t * g;
    }
    return true;
}

namespace {

using Coeffs = std::vector<Poly>;

// f as a polynomial in x_var with coefficients free of x_var.
Coeffs split(const Poly& f, int var) {
    const int n = f.nvars();
    Coeffs c(f.degree_in(var) + 1, Poly(n));
    for (const auto& t : f.terms()) {
        Mono m = t.mono;
        int e = m[var];
        m[var] = 0;
        c[e] += Poly::monomial(n, m, t.coef);
    }
    return c;
}

Poly join(const Coeffs& c, int var, int n) {
    Poly f(n);
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        Mono m{};
        m[var] = static_cast<std::uint16_t>(e);
        f += c[e] * Poly::monomial(n, m, 1);
    }
    return f;
}

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly content(const Coeffs& c) {
    Poly g(c.empty() ? 0 : c[0].nvars());
    for (const auto& p : c) {
        g = gcd(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Coeffs divide_all(const Coeffs& c, const Poly& d) {
    Coeffs out;
    for (const auto& p : c) {
        Poly q;
        if (!divide_exact(p, d, q)) throw InternalError("content does not divide a coefficient");
        out.push_back(q);
    }
    return out;
}

// Scales c so that all coefficients are coprime integers.
void strip_numeric_content(Coeffs& c) {
    mpz_class num = 0, den = 1;
    for (const auto& p : c)
        for (const auto& t : p.terms()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
        }
    if (num == 0) return;
    Rational k(den, num);
    k.canonicalize();
    for (auto& p : c) p *= k;
}

Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
    const Poly& lb = b.back();
    while (a.size() >= b.size()) {
        Poly la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& p : a) p *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

int top_variable(const Poly& f) {
    int v = -1;
    for (int i = 0; i < f.nvars(); ++i)
        if (f.degree_in(i) > 0) v = i;
    return v;
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    const int n = std::max(f.nvars(), g.nvars());
    if (f.is_constant() || g.is_constant()) return Poly::constant(n, 1);
    Poly q;
    if (f.total_degree() >= g.total_degree() && divide_exact(f, g, q)) return g.monic();
    if (g.total_degree() >= f.total_degree() && divide_exact(g, f, q)) return f.monic();
    int var = std::max(top_variable(f), top_variable(g));
    Coeffs a = split(f, var), b = split(g, var);
    if (a.size() == 1) return gcd(f, content(b));
    if (b.size() == 1) return gcd(content(a), g);
    Poly ca = content(a), cb = content(b);
    Poly c = gcd(ca, cb);
    a = divide_all(a, ca);
    b = divide_all(b, cb);
    strip_numeric_content(a);
    strip_numeric_content(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        Coeffs r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (r.size() == 1) return c.monic();
        r = divide_all(r, content(r));
        strip_numeric_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    return (c * join(b, var, n)).monic();
}

Poly root_poly(const FiniteRootSystem& R, int root) {
    RVec c(R.rank());
    for (int j = 0; j < R.rank(); ++j) c[j] = R.form(root)[j];
    return Poly::linear(c);
}

Poly weyl_act(const FiniteWeyl& W, int w, const Poly& f) {
    if (w == W.identity()) return f;
    return f.substitute(W.matrix(W.inverse(w)));
}

Poly demazure(const FiniteWeyl& W, int root, const Poly& f) {
    Poly diff = weyl_act(W, W.reflection(root), f) - f;
    Poly q;
    if (!divide_exact(diff, root_poly(W.roots(), root), q)) throw InternalError("divided difference left a remainder");
    return q;
}

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.nvars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
    const int n = std::max(num_.nvars(), den_.nvars());
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        num_ = Poly(n);
        den_ = Poly::constant(n, 1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            Poly q;
            divide_exact(num_, g, q);
            num_ = q;
            divide_exact(den_, g, q);
            den_ = q;
        }
    }
    Rational lc = 1 / den_.leading().coef;
    num_ *= lc;
    den_ *= lc;
}

Poly RatFunc::as_poly() const {
    if (!is_polynomial()) throw NotInAlgebra("rational function is not a polynomial: " + to_string());
    return num_;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    Poly g = gcd(a.den_, b.den_);
    Poly ad, bd;
    divide_exact(a.den_, g, ad);
    divide_exact(b.den_, g, bd);
    Poly num = a.num_ * bd + b.num_ * ad;
    Poly den = a.den_ * bd;
    if (g.is_constant()) {
        if (num.is_zero()) return RatFunc(a.nvars());
        return RatFunc(std::move(num), std::move(den), RatFunc::Reduced{});
    }
    return RatFunc(std::move(num), std::move(den));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    const int n = std::max(a.nvars(), b.nvars());
    if (a.is_zero() || b.is_zero()) return RatFunc(n);
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_);
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    auto cancel = [](Poly& x, Poly& y) {
        if (x.is_constant() || y.is_constant()) return;
        Poly g = gcd(x, y);
        if (g.is_constant()) return;
        Poly q;
        divide_exact(x, g, q);
        x = q;
        divide_exact(y, g, q);
        y = q;
    };
    cancel(an, bd);
    cancel(bn, ad);
    Poly num = an * bn, den = ad * bd;
    Rational lc = 1 / den.leading().coef;
    num *= lc;
    den *= lc;
    return RatFunc(std::move(num), std::move(den), RatFunc::Reduced{});
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    Rational lc = 1 / num_.leading().coef;
    return RatFunc(den_ * lc, num_ * lc, Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(e), den_.pow(e), Reduced{});
}

RatFunc RatFunc::substitute(const std::vector<IVec>& m) const {
    Poly n = num_.substitute(m), d = den_.substitute(m);
    Rational lc = 1 / d.leading().coef;
    return RatFunc(n * lc, d * lc, Reduced{});
}

Rational RatFunc::eval(const RVec& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc weyl_act(const FiniteWeyl& W, int w, const RatFunc& f) {
    if (w == W.identity()) return f;
    return f.substitute(W.matrix(W.inverse(w)));
}

}  // namespace qdha
