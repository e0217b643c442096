#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdha/rational.hpp"
#include "qdha/weyl.hpp"

namespace qdha {

constexpr int kMaxVars = 8;
using Mono = std::array<std::uint16_t, kMaxVars>;

int mono_degree(const Mono& m);
// Graded lexicographic order with x1 > x2 > ... .
bool grlex_less(const Mono& a, const Mono& b);

// Sparse polynomial over Q in the coordinate functions x1..xn of V (coroot coordinates).
// Terms are stored in strictly decreasing graded lex order with nonzero coefficients.
class Poly {
public:
    struct Term {
        Mono mono;
        Rational coef;
    };

    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int i);
    // Sum of coeffs[i] x_{i+1}.
    static Poly linear(const RVec& coeffs);
    static Poly monomial(int nvars, const Mono& m, const Rational& c);

    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }
    int total_degree() const;
    int low_degree() const;
    bool is_homogeneous() const;
    // Grading with deg x_i = 2.
    int grade() const { return 2 * total_degree(); }
    int degree_in(int var) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;

    Poly pow(int e) const;
    Rational eval(const RVec& x) const;
    // x_i -> sum_j m[i][j] x_j.
    Poly substitute(const std::vector<IVec>& m) const;
    // Scaled so that the leading coefficient is 1 (zero stays zero).
    Poly monic() const;
    // Sum of terms of total degree d.
    Poly homogeneous_part(int d) const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Term> terms_;

    void canonicalize();
};

// Exact quotient f / g, or false when g does not divide f.
bool divide_exact(const Poly& f, const Poly& g, Poly& quotient);
// Monic greatest common divisor (gcd(0, 0) = 0).
Poly gcd(const Poly& f, const Poly& g);

// The root b as a linear polynomial on V.
Poly root_poly(const FiniteRootSystem& R, int root);
// w(f) = f o w^{-1}.
Poly weyl_act(const FiniteWeyl& W, int w, const Poly& f);
// (s_b f - f) / b.
Poly demazure(const FiniteWeyl& W, int root, const Poly& f);

// Reduced fraction with monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(int nvars) : num_(nvars), den_(Poly::constant(nvars, 1)) {}
    RatFunc(Poly p);  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);
    static RatFunc constant(int nvars, const Rational& c) { return RatFunc(Poly::constant(nvars, c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Requires is_polynomial().
    Poly as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const { return num_ == o.num_ ? den_ < o.den_ : num_ < o.num_; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;
    RatFunc substitute(const std::vector<IVec>& m) const;
    // Throws DivisionByZero when the denominator vanishes at x.
    Rational eval(const RVec& x) const;
    std::string to_string() const;

private:
    Poly num_, den_;
    struct Reduced {};
    RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
};

RatFunc weyl_act(const FiniteWeyl& W, int w, const RatFunc& f);

}  // namespace qdha
