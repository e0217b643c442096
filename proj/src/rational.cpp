#include "qdha/rational.hpp"

#include <algorithm>
#include <cctype>

#include "qdha/errors.hpp"

namespace qdha {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw UsageError("empty rational literal");
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') body = body.substr(1);
    auto slash = body.find('/');
    auto digits = [](const std::string& d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (slash == std::string::npos ? !digits(body) : !(digits(body.substr(0, slash)) && digits(body.substr(slash + 1))))
        throw UsageError("malformed rational literal: " + text);
    if (s[0] == '+') s = s.substr(1);
    Rational q;
    q.set_str(s, 10);
    if (q.get_den() == 0) throw UsageError("zero denominator in " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RVec& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + "]";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational floor_of(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

Rational frac(const Rational& q) { return q - floor_of(q); }

long to_long(const Rational& q) {
    if (!is_integer(q)) throw InternalError("non-integral value " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw InternalError("integer overflow");
    return q.get_num().get_si();
}

RVec zero_vec(int n) { return RVec(static_cast<size_t>(n), Rational(0)); }

RVec add(const RVec& a, const RVec& b) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RVec sub(const RVec& a, const RVec& b) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RVec scale(const Rational& c, const RVec& a) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

RVec neg(const RVec& a) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool is_zero(const RVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

RVec solve(const RMat& m, const RVec& b) {
    const size_t n = m.size();
    RMat a = m;
    RVec x = b;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InternalError("singular matrix in solve");
        std::swap(a[piv], a[col]);
        std::swap(x[piv], x[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            x[r] -= f * x[col];
        }
    }
    for (size_t i = 0; i < n; ++i) x[i] /= a[i][i];
    return x;
}

RMat transpose(const RMat& m) {
    if (m.empty()) return {};
    RMat t(m[0].size(), RVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RMat inverse(const RMat& m) {
    const size_t n = m.size();
    RMat cols;
    for (size_t j = 0; j < n; ++j) {
        RVec e = zero_vec(static_cast<int>(n));
        e[j] = 1;
        cols.push_back(solve(m, e));
    }
    return transpose(cols);
}

int rank(RMat a) {
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace qdha
