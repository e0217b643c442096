#pragma once

#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdha/kz.hpp"

namespace qdha {

struct Report {
    std::string check;
    std::string instance;  // digest
    long cases = 0;
    std::vector<std::string> failures;
    nlohmann::json details = nlohmann::json::object();
    bool pass() const { return failures.empty(); }
};
nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

// A random word of at most max_len letters.
IVec random_word(std::mt19937& rng, int letters, int max_len);

// Closed length formula (both forms) against the inversion count on the ball.
Report verify_length(const AffineWeyl& W, int ball);
// Random words from the base point: polynomial normal forms that reconstruct the operator.
Report verify_basis(const OrderFunction& omega, int samples, int max_len, std::mt19937& rng);
// braid_defect <= m_ab - 1 for every pair with finite m_ab and every orbit point within the window.
Report verify_braid(const OrderFunction& omega, int window);
Report verify_filtration(const OrderFunction& omega, int samples, int max_len, std::mt19937& rng);
// Independence of gamma (gamma against 2 gamma), and agreement with the K-side order function when h is given.
Report verify_integral(const OrderFunction& omega, const RVec& gamma, const RVec* h);
Report verify_iso(const OrderFunction& omega, const RVec& gamma, int degree, int word_bound);
// Gram rank at the given degree and trace symmetry on random pairs.
Report verify_frobenius(const OrderFunction& omega, const RVec& gamma, int degree, int pairs, std::mt19937& rng);
// Kernel criterion on the character of each single clan, of all clans and of nothing.
Report verify_kernel(const OrderFunction& omega, const RVec& gamma, int clan_bound, int n_max);
// gamma change (gamma, 2 gamma), the product formula for every (w, ell) and the length inequality.
Report verify_gamma(const OrderFunction& omega, const RVec& gamma);

// The running rank-one example (lambda0 = 1/4, h = 1/2, gamma = -1) end to end: clan table,
// gamma-section, the five-letter products, Omega, the isomorphism and the kernel flags.
Report verify_example_a1();

// A random element of B: a sum of two random words with linear polynomial coefficients.
RatOperator random_b_element(const BqhaAlgebra& B, std::mt19937& rng, int max_len);

}  // namespace qdha
