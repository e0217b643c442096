#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qdha {

using Rational = mpq_class;
using RVec = std::vector<Rational>;
using IVec = std::vector<int>;
using RMat = std::vector<RVec>;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const RVec& v);

bool is_integer(const Rational& q);
Rational floor_of(const Rational& q);
// q - floor(q), in [0, 1).
Rational frac(const Rational& q);
// Requires an integral value that fits in a long.
long to_long(const Rational& q);

RVec zero_vec(int n);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rational& c, const RVec& a);
RVec neg(const RVec& a);
bool is_zero(const RVec& a);

// Solves M x = b for square invertible M; throws InternalError when singular.
RVec solve(const RMat& m, const RVec& b);
RMat inverse(const RMat& m);
RMat transpose(const RMat& m);
// Rank by exact Gaussian elimination.
int rank(RMat m);

}  // namespace qdha
