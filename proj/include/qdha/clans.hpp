#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdha/orderfun.hpp"

namespace qdha {

// Strict feasibility of {v : row . v > 0 for every row} by Fourier-Motzkin elimination.
bool strictly_feasible(std::vector<RVec> rows);

// Sign vector entries are +1 or -1.
using SignVector = std::vector<int>;

struct Clan {
    SignVector signs;
    // Minimal-length g with the alcove g^{-1} nu0 inside the clan, and that alcove's sample point.
    AffElem representative;
    RVec sample;
    bool generic = false;
};

struct ClanDecomposition {
    // Positive affine roots a with omega~(a) >= 1 (one per hyperplane).
    std::vector<AffineRoot> hyperplanes;
    std::vector<Clan> clans;
    long alcoves_explored = 0;

    // Index of the clan with the given sign vector, or -1.
    int find(const SignVector& s) const;
};

std::vector<AffineRoot> clan_hyperplanes(const OrderFunction& omega);
// Signs of a(x) over the hyperplanes; throws InternalError when x lies on one of them.
SignVector sign_vector(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes, const RVec& x);
// Whether some point has exactly these signs.
bool realizable(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes, const SignVector& s);
// Every realizable sign vector, by adding hyperplanes one at a time.
std::vector<SignVector> arrangement_regions(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes);
// Full dimensionality of the recession cone {v : s_a da(v) >= 0}.
bool is_generic(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes, const SignVector& s);

// Alcoves g^{-1} nu0 for g in the ball of the given radius, grouped by clan. Throws
// IncompleteExploration when a realizable region has no alcove in the ball.
ClanDecomposition enumerate_clans(const OrderFunction& omega, int exploration_bound);
// Clan of the alcove attached to an orbit point, i.e. of w^{-1} nu0 for the witness w of lambda.
int clan_of_weight(const ClanDecomposition& D, const OrderFunction& omega, const RVec& lambda);

// Distinct sign vectors met by the grid points (k/denominator) with |k| <= radius*denominator
// off every hyperplane.
std::vector<SignVector> grid_sign_vectors(const AffineRootSystem& S, const std::vector<AffineRoot>& hyperplanes,
                                          int radius, int denominator);
// Clans of the alcoves w^{-1} X^{-gamma} nu0 for w in W_R, sorted and without repeats.
IVec clans_of_gamma_alcoves(const ClanDecomposition& D, const AffineWeyl& W, const RVec& gamma);

// Clan names for printing: C+, C-, C0 in rank one, otherwise the sign string.
std::string clan_label(const AffineWeyl& W, const ClanDecomposition& D, int clan);

}  // namespace qdha
