#include <set>

#include "doctest.h"
#include "qdha/errors.hpp"
#include "qdha/rootsys.hpp"

using namespace qdha;

namespace {

// Brute-force closure of the simple roots under reflections, computed in ambient coordinates.
std::set<RVec> ambient_closure(const FiniteRootSystem& R) {
    std::vector<RVec> simple;
    for (int i = 0; i < R.rank(); ++i) simple.push_back(R.ambient(i));
    auto dot = [](const RVec& a, const RVec& b) {
        Rational s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    std::set<RVec> seen(simple.begin(), simple.end());
    std::vector<RVec> queue(simple.begin(), simple.end());
    for (size_t q = 0; q < queue.size(); ++q)
        for (const auto& s : simple) {
            RVec v = sub(queue[q], scale(2 * dot(s, queue[q]) / dot(s, s), s));
            if (seen.insert(v).second) queue.push_back(v);
        }
    return seen;
}

}  // namespace

TEST_CASE("finite root systems have the expected sizes") {
    CHECK(FiniteRootSystem::build("A1").num_positive() == 1);
    CHECK(FiniteRootSystem::build("A1").num_roots() == 2);
    CHECK(FiniteRootSystem::build("A2").num_positive() == 3);
    CHECK(FiniteRootSystem::build("B2").num_positive() == 4);
    CHECK(FiniteRootSystem::build("C2").num_positive() == 4);
    CHECK(FiniteRootSystem::build("G2").num_positive() == 6);
    CHECK(FiniteRootSystem::build("A3").num_positive() == 6);
    CHECK_THROWS_AS(FiniteRootSystem::build("E8"), UsageError);
    CHECK_THROWS_AS(FiniteRootSystem::build("A0"), UsageError);
}

TEST_CASE("root sets agree with ambient reflection closure") {
    for (const char* label : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
        auto R = FiniteRootSystem::build(label);
        auto oracle = ambient_closure(R);
        std::set<RVec> ours;
        for (int b = 0; b < R.num_roots(); ++b) ours.insert(R.ambient(b));
        CHECK(ours == oracle);
    }
}

TEST_CASE("highest root of A2 is a1 + a2") {
    auto R = FiniteRootSystem::build("A2");
    CHECK(R.coords(R.highest_root()) == IVec{1, 1});
    CHECK(R.coxeter_number() == 3);
    auto G = FiniteRootSystem::build("G2");
    CHECK(G.coxeter_number() == 6);
}

TEST_CASE("pairings are integral and reflections are involutions") {
    for (const char* label : {"A2", "B2", "C2", "G2"}) {
        auto R = FiniteRootSystem::build(label);
        for (int a = 0; a < R.num_roots(); ++a) {
            CHECK(R.reflect(a, a) == R.negate(a));
            for (int b = 0; b < R.num_roots(); ++b) {
                CHECK(is_integer(2 * R.inner(a, b) / R.inner(a, a)));
                CHECK(R.reflect(a, R.reflect(a, b)) == b);
            }
        }
    }
}

TEST_CASE("roots evaluate on coroots through the Cartan matrix") {
    for (const char* label : {"A2", "B2", "C2", "G2"}) {
        auto R = FiniteRootSystem::build(label);
        for (int a = 0; a < R.num_roots(); ++a) {
            CHECK(R.eval(a, R.coroot(a)) == 2);
            for (int b = 0; b < R.num_roots(); ++b) CHECK(R.eval(b, R.coroot(a)) == R.pairing(a, b));
        }
        for (int i = 0; i < R.rank(); ++i)
            for (int j = 0; j < R.rank(); ++j)
                CHECK(R.eval(j, R.fundamental_coweights()[i]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("synthetic BC systems contain doubled roots") {
    auto R = FiniteRootSystem::synthetic_bc(1);
    CHECK_FALSE(R.is_reduced());
    CHECK(R.num_positive() == 2);
    CHECK(R.is_divisible(1));
    CHECK(R.half(1) == 0);
    auto R2 = FiniteRootSystem::synthetic_bc(2);
    CHECK(R2.num_positive() == 6);
}

TEST_CASE("affine reflections and the differential") {
    AffineRootSystem S(FiniteRootSystem::build("A2"));
    const auto& R = S.finite();
    AffineRoot a0 = S.simple(0);
    CHECK(a0.root == R.negate(R.highest_root()));
    CHECK(a0.level == 1);
    AffineRoot a1 = S.simple(1), a2 = S.simple(2);
    CHECK(S.reflect(a1, a1) == S.negate(a1));
    AffineRoot r = S.reflect(a1, a2);
    CHECK(R.coords(r.root) == IVec{1, 1});
    CHECK(r.level == 0);
    AffineRoot plus3{0, 3};
    CHECK(S.differential(plus3) == 0);
    for (int b = 0; b < R.num_roots(); ++b)
        for (long k = -2; k <= 2; ++k) {
            AffineRoot x{b, k};
            CHECK(S.differential(S.reflect(a0, x)) == R.reflect(S.differential(a0), b));
            CHECK(S.reflect(a0, S.reflect(a0, x)) == x);
        }
}

TEST_CASE("positive windows") {
    AffineRootSystem A1(FiniteRootSystem::build("A1"));
    CHECK(A1.positive_window(0).size() == 1);
    CHECK(A1.positive_window(1).size() == 3);
    AffineRootSystem A2(FiniteRootSystem::build("A2"));
    CHECK(A2.positive_window(1).size() == 9);
}
