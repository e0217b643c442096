#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qdha/lattice.hpp"
#include "qdha/rational.hpp"

namespace qdha {

// Irreducible finite root system. Roots are indexed: positive roots first (simple roots in
// positions 0..rank-1, then by height), followed by their negatives in the same order.
// Roots carry root-lattice coordinates; points of V carry coordinates in the basis of simple
// coroots, so a root acts on a point through its coefficients in the fundamental-weight basis.
class FiniteRootSystem {
public:
    // Labels A1, A2, B2, C2, G2 and An for n >= 1. Throws UsageError on anything else.
    static FiniteRootSystem build(const std::string& label);
    // Generic constructor from ambient simple roots. With doubled_short, 2b is added for every
    // root b of minimal length (giving BC_n from B_n, or BC_1 from A_1).
    static FiniteRootSystem from_simple_roots(std::string label, std::vector<RVec> ambient_simple,
                                              bool doubled_short = false);
    static FiniteRootSystem synthetic_bc(int n);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_positive_; }
    bool is_reduced() const { return reduced_; }

    const IVec& coords(int root) const { return roots_[root]; }
    const IVec& form(int root) const { return forms_[root]; }
    const RVec& ambient(int root) const { return ambient_[root]; }
    bool is_positive(int root) const { return root < num_positive_; }
    int negate(int root) const { return root < num_positive_ ? root + num_positive_ : root - num_positive_; }
    // Membership in 2R.
    bool is_divisible(int root) const { return divisible_[root]; }
    // Index of b/2 for b in 2R, or of 2b when 2b is a root, else -1.
    int half(int root) const { return half_[root]; }
    int twice(int root) const { return twice_[root]; }
    int find(const IVec& n) const;
    int simple(int i) const { return i; }
    int highest_root() const { return highest_; }
    int height(int root) const;
    int coxeter_number() const { return height(highest_) + 1; }

    int cartan(int i, int j) const { return cartan_[i][j]; }
    const RMat& gram() const { return gram_; }
    Rational inner(int a, int b) const;
    // <a^vee, b> = 2(a,b)/(a,a); always an integer.
    int pairing(int a, int b) const { return pairing_[a][b]; }
    // s_a(b).
    int reflect(int a, int b) const { return reflect_[a][b]; }

    // Value of a root on a point given in coroot coordinates.
    Rational eval(int root, const RVec& x) const;
    // The coroot a^vee in coroot coordinates.
    const RVec& coroot(int root) const { return coroots_[root]; }

    const Lattice& coroot_lattice() const { return coroot_lattice_; }
    // Fundamental coweights (coroot coordinates): a basis of the coweight lattice.
    const std::vector<RVec>& fundamental_coweights() const { return fund_coweights_; }
    bool in_coweight_lattice(const RVec& x) const;
    // Ambient bases of the root and weight lattices.
    const std::vector<RVec>& root_lattice_basis() const { return root_basis_; }
    const std::vector<RVec>& weight_lattice_basis() const { return weight_basis_; }

    // Sum of positive coroots (coroot coordinates).
    RVec two_rho_check() const;

private:
    std::string label_;
    int rank_ = 0;
    int num_positive_ = 0;
    bool reduced_ = true;
    std::vector<RVec> simple_ambient_;
    RMat gram_;
    std::vector<IVec> cartan_;
    std::vector<IVec> roots_;
    std::vector<IVec> forms_;
    std::vector<RVec> ambient_;
    std::vector<RVec> coroots_;
    std::vector<bool> divisible_;
    IVec half_, twice_;
    std::vector<IVec> pairing_;
    std::vector<IVec> reflect_;
    int highest_ = 0;
    Lattice coroot_lattice_;
    std::vector<RVec> fund_coweights_;
    std::vector<RVec> root_basis_, weight_basis_;
};

// a = finite root + level, the affine function x -> root(x) + level.
struct AffineRoot {
    int root = 0;
    long level = 0;
    auto operator<=>(const AffineRoot&) const = default;
};

class AffineRootSystem {
public:
    explicit AffineRootSystem(FiniteRootSystem finite);

    const FiniteRootSystem& finite() const { return finite_; }
    int rank() const { return finite_.rank(); }
    // Letters of the affine basis: 0 is a0 = 1 - theta, letter i >= 1 is the simple root i-1.
    int num_letters() const { return finite_.rank() + 1; }
    AffineRoot simple(int letter) const;

    bool in_S(const AffineRoot& a) const;
    bool is_positive(const AffineRoot& a) const { return a.level > 0 || (a.level == 0 && finite_.is_positive(a.root)); }
    bool is_negative(const AffineRoot& a) const { return !is_positive(a); }
    AffineRoot negate(const AffineRoot& a) const { return {finite_.negate(a.root), -a.level}; }
    int differential(const AffineRoot& a) const { return a.root; }
    int pairing(const AffineRoot& a, const AffineRoot& b) const { return finite_.pairing(a.root, b.root); }
    AffineRoot reflect(const AffineRoot& a, const AffineRoot& b) const;
    Rational eval(const AffineRoot& a, const RVec& x) const { return finite_.eval(a.root, x) + a.level; }
    // All a in S+ with |level| <= level_bound.
    std::vector<AffineRoot> positive_window(int level_bound) const;
    // The representative of {a, -a} lying in S+.
    AffineRoot positive_representative(const AffineRoot& a) const { return is_positive(a) ? a : negate(a); }

    std::string to_string(const AffineRoot& a) const;

private:
    FiniteRootSystem finite_;
};

}  // namespace qdha
