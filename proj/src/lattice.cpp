#include "qdha/lattice.hpp"

#include "qdha/errors.hpp"

namespace qdha {

Lattice::Lattice(const std::vector<RVec>& generators, int dim) {
    mpz_class common = 1;
    for (const auto& g : generators)
        for (const auto& q : g) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : generators) {
        std::vector<mpz_class> row(dim);
        for (int j = 0; j < dim; ++j) {
            Rational s = g[j] * common;
            row[j] = s.get_num();
        }
        rows.push_back(row);
    }
    size_t pivot = 0;
    for (int c = 0; c < dim && pivot < rows.size(); ++c) {
        while (true) {
            size_t best = rows.size();
            for (size_t i = pivot; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[pivot], rows[best]);
            bool done = true;
            for (size_t i = pivot + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[pivot][c].get_mpz_t());
                for (int k = c; k < dim; ++k) rows[i][k] -= q * rows[pivot][k];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (pivot < rows.size() && rows[pivot][c] != 0) {
            if (rows[pivot][c] < 0)
                for (auto& x : rows[pivot]) x = -x;
            ++pivot;
        }
    }
    if (static_cast<int>(pivot) != dim) throw InternalError("lattice generators are not of full rank");
    for (size_t i = 0; i < pivot; ++i) {
        RVec b(dim);
        for (int j = 0; j < dim; ++j) b[j] = Rational(rows[i][j], common), b[j].canonicalize();
        basis_.push_back(b);
    }
    basis_t_ = transpose(basis_);
}

RVec Lattice::coordinates(const RVec& v) const { return solve(basis_t_, v); }

bool Lattice::contains(const RVec& v) const {
    for (const auto& t : coordinates(v))
        if (!is_integer(t)) return false;
    return true;
}

RVec Lattice::reduce(const RVec& v) const {
    RVec t = coordinates(v);
    RVec out = zero_vec(static_cast<int>(v.size()));
    for (size_t i = 0; i < t.size(); ++i) out = add(out, scale(frac(t[i]), basis_[i]));
    return out;
}

}  // namespace qdha
