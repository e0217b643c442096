#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdha/rootsys.hpp"

namespace qdha {

// The finite Weyl group W_R as a table of permutations of R. Element 0 is the identity.
class FiniteWeyl {
public:
    explicit FiniteWeyl(const FiniteRootSystem& R);

    int size() const { return static_cast<int>(perms_.size()); }
    int identity() const { return 0; }
    int simple(int i) const { return simple_[i]; }
    int longest() const { return longest_; }
    // w(b) for a root index b.
    int act(int w, int root) const { return perms_[w][root]; }
    int mul(int u, int v) const;
    int inverse(int w) const { return inverse_[w]; }
    int length(int w) const { return length_[w]; }
    // Lexicographically least reduced word w = s_{i1} ... s_{il} (finite simple indices).
    const IVec& word(int w) const { return words_[w]; }
    // Matrix of w on coroot coordinates of points.
    const std::vector<IVec>& matrix(int w) const { return mats_[w]; }
    RVec act_point(int w, const RVec& x) const;
    // The reflection s_b.
    int reflection(int root) const { return reflections_[root]; }
    int find(const IVec& perm) const;
    // s_i w < w, i.e. w^{-1} a_i < 0.
    bool has_left_descent(int w, int i) const { return !R_->is_positive(act(inverse(w), i)); }
    const FiniteRootSystem& roots() const { return *R_; }

private:
    const FiniteRootSystem* R_;
    std::vector<IVec> perms_;
    std::map<IVec, int> index_;
    IVec simple_;
    IVec inverse_;
    IVec length_;
    std::vector<IVec> words_;
    std::vector<std::vector<IVec>> mats_;
    IVec reflections_;
    int longest_ = 0;
    std::vector<IVec> left_simple_;  // left_simple_[w][i] = s_i w
};

// X^mu w: translation mu in coroot coordinates, finite part w (index in FiniteWeyl).
struct AffElem {
    RVec mu;
    int w = 0;
    bool operator==(const AffElem& o) const { return w == o.w && mu == o.mu; }
    bool operator<(const AffElem& o) const { return w != o.w ? w < o.w : mu < o.mu; }
};

struct PointLess {
    bool operator()(const RVec& a, const RVec& b) const { return a < b; }
};

// The affine Weyl group W_S (and its extension by P^vee where translations allow it).
class AffineWeyl {
public:
    explicit AffineWeyl(FiniteRootSystem R);
    AffineWeyl(const AffineWeyl&) = delete;
    AffineWeyl& operator=(const AffineWeyl&) = delete;

    const AffineRootSystem& affine() const { return S_; }
    const FiniteRootSystem& roots() const { return S_.finite(); }
    const FiniteWeyl& finite() const { return W_; }
    int rank() const { return roots().rank(); }
    int num_letters() const { return rank() + 1; }

    AffElem identity() const;
    AffElem translation(const RVec& mu) const { return {mu, 0}; }
    AffElem finite_elem(int w) const { return {zero_vec(rank()), w}; }
    AffElem compose(const AffElem& u, const AffElem& v) const;
    AffElem inverse(const AffElem& g) const;
    // Reflection s_a in the hyperplane a = 0.
    AffElem reflection(const AffineRoot& a) const;
    AffElem simple_reflection(int letter) const { return letters_[letter]; }
    AffElem from_word(const IVec& letters) const;

    RVec act_point(const AffElem& g, const RVec& x) const;
    AffineRoot act_root(const AffElem& g, const AffineRoot& a) const;

    // #(S+ cap g^{-1} S-) by enumeration of the finitely many levels that can invert.
    long length_inversions(const AffElem& g) const;
    // Closed formula for l(X^mu w).
    long length_formula(const AffElem& g) const;
    // Closed formula for l(w X^nu), evaluated on the same element rewritten as w X^{w^{-1} mu}.
    long length_formula_right(const AffElem& g) const;
    long length(const AffElem& g) const { return length_formula(g); }
    std::vector<AffineRoot> inversion_set(const AffElem& g) const;

    // Left descents: letters i with l(s_i g) < l(g).
    bool is_left_descent(const AffElem& g, int letter) const;
    // Word [i1, ..., il] with g = s_{i1} ... s_{il}; lexicographically least left descent first.
    IVec reduced_word(const AffElem& g) const;

    // theta(mu) = X^mu w_mu, the minimal element of X^mu W_R.
    AffElem min_coset_rep(const RVec& mu) const;
    // Sum over left descents alpha_i of w of w^{-1} w0 omega_i^vee.
    RVec b_w(int w) const;

    // Elements of the stabiliser of a point and the reflections generating it.
    std::vector<AffElem> stabilizer(const RVec& lambda) const;
    std::vector<AffElem> stabilizer_generators(const RVec& lambda) const;

    struct OrbitPoint {
        RVec point;
        AffElem witness;
        int distance;
    };
    // All points g lambda0 with l(g) <= bound with a minimal witness, in BFS order.
    std::vector<OrbitPoint> orbit_window(const RVec& lambda0, int bound) const;
    // All elements of length <= bound, in BFS order.
    std::vector<AffElem> ball(int bound) const;

    // The point x0 in the fundamental alcove with alpha_i(x0) = 1/h.
    const RVec& alcove_sample() const { return x0_; }
    // Sample point of the alcove g^{-1} nu0.
    RVec alcove_point(const AffElem& g) const { return act_point(inverse(g), x0_); }
    // Order of s_a s_b for letters a != b; 0 means infinite.
    int braid_order(int a, int b) const;

    // Finite part u and translation with g lambda0 = lambda, if lambda lies in W_S lambda0.
    std::optional<AffElem> witness(const RVec& lambda0, const RVec& lambda) const;

    std::string word_string(const IVec& w) const;

private:
    AffineRootSystem S_;
    FiniteWeyl W_;
    std::vector<AffElem> letters_;
    RVec x0_;
};

}  // namespace qdha
