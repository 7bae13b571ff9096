#include "doctest.h"

#include "chyp/reps.hpp"
#include "chyp/words.hpp"

#include <random>
#include <set>

using namespace chyp;

namespace {
using Q = GaussRational;
Q gq(int a, int b, int c = 0, int d = 1) { return Q(Rational(a, b), Rational(c, d)); }

// a power of A equal to M projectively, if any with |j| <= 4
std::optional<int> as_a_power(const RepresentationBundle& rep, const Mat3c& M) {
    for (int j = -4; j <= 4; ++j)
        if (projective_deviation(M, matrix_power(rep.A.matrix, j)) < 1e-9) return j;
    return std::nullopt;
}
}  // namespace

TEST_CASE("n=4 generator B matches the published matrix exactly") {
    const RepresentationBundle rep = generators(4);
    REQUIRE(rep.exact);
    const Mat3q& B = rep.exact->B;
    CHECK(B(0, 0) == gq(1, 2, -1, 1));
    CHECK(B(0, 1) == gq(1, 2, -1, 2));
    CHECK(B(0, 2) == gq(-5, 2, -1, 1));
    CHECK(B(1, 0) == gq(-1, 2, 1, 2));
    CHECK(B(1, 1) == gq(-1, 1, 1, 1));
    CHECK(B(1, 2) == gq(3, 2, 1, 2));
    CHECK(B(2, 0) == gq(-1, 2));
    CHECK(B(2, 1) == gq(-1, 2, 1, 2));
    CHECK(B(2, 2) == gq(1, 2));
}

TEST_CASE("A = I1 I2 is the translation by (-2,0)") {
    const RepresentationBundle rep = generators(4);
    const Mat3q T = heis_translation_matrix(HeisPointQ{Q(-2), Rational(0)});
    CHECK(rep.exact->A == T);
    CHECK(rep.exact->A(0, 1) == Q(2));
    CHECK(rep.exact->A(0, 2) == Q(-2));
    CHECK(rep.exact->A(1, 2) == Q(-2));
}

TEST_CASE("I3 for n=4 has polar vector (1, 1+i, 1)") {
    const RepresentationBundle rep = generators(4);
    const Mat3q R = complex_reflection(Vec3q(Q(1), Q(Rational(1), Rational(1)), Q(1)));
    CHECK(rep.exact->I3 == R);
    CHECK(rep.exact->I3(0, 0) == gq(-1, 2));
    CHECK(rep.exact->I3(2, 0) == gq(1, 2));
}

TEST_CASE("the sqrt(23) reflection is the n=6 datum") {
    const RepresentationBundle rep = generators(6);
    CHECK(rep.I3.matrix(2, 0).real() == doctest::Approx(0.75));
    CHECK(rep.I3.matrix(0, 0).real() == doctest::Approx(-0.5));
    const Mat3c W = rep.I1.matrix * rep.I3.matrix * rep.I2.matrix * rep.I3.matrix;
    CHECK(W.trace().real() == doctest::Approx(2.0));
    CHECK(identity_deviation(matrix_power(W, 6)) < 1e-12);
    // with n=4 the same reflection would need (I1I3I2I3)^4 = id, which fails
    CHECK(identity_deviation(matrix_power(W, 4)) > 0.1);
}

TEST_CASE("relations hold") {
    const RelationReport r4 = verify_relations(generators(4));
    CHECK(r4.all_pass());
    for (const auto& c : r4.checks) {
        CHECK_MESSAGE(c.exact_identity.value_or(false), c.name);
        CHECK(c.deviation < 1e-12);
    }
    const RelationReport r6 = verify_relations(generators(6));
    CHECK(r6.all_pass());
    for (const auto& c : r6.checks) CHECK_MESSAGE(c.deviation < 1e-9, c.name);
}

TEST_CASE("perturbed generator violates B^3") {
    RepresentationBundle rep = generators(6);
    const double eps = 1e-4;
    rep.B.matrix(0, 0) += eps;
    const RelationReport r = verify_relations(rep);
    CHECK_FALSE(r.all_pass());
    for (const auto& c : r.checks)
        if (c.name == "B^3") CHECK(c.deviation >= eps);
}

TEST_CASE("solver recovers both representations") {
    const RepresentationBundle s4 = solve_representation(4);
    const RepresentationBundle g4 = generators(4);
    CHECK(projective_deviation(s4.B.matrix, g4.B.matrix) < 1e-10);
    CHECK(projective_deviation(s4.I3.matrix, g4.I3.matrix) < 1e-10);
    const RepresentationBundle s6 = solve_representation(6);
    const RepresentationBundle g6 = generators(6);
    CHECK(projective_deviation(s6.I3.matrix, g6.I3.matrix) < 1e-10);
    const Mat3c W = s6.I1.matrix * s6.I3.matrix * s6.I2.matrix * s6.I3.matrix;
    CHECK(identity_deviation(matrix_power(W, 6)) < 1e-9);
    for (int k = 1; k < 6; ++k) CHECK(identity_deviation(matrix_power(W, k)) > 1e-3);
    CHECK_THROWS_AS(solve_representation(5), Error);
}

TEST_CASE("essential words") {
    const RepresentationBundle rep = generators(4);
    const WordSet s3 = essential_words(rep, 3);
    const std::set<std::string> got(s3.words.begin(), s3.words.end());
    const std::set<std::string> want{"b", "B", "Bab", "BaB", "BAB", "bAB", "BAb", "bAb", "bab", "baB"};
    CHECK(got == want);
    for (const auto& w : s3.words) {
        CHECK(w.size() != 2);
        CHECK(s3.contains(inverse_word(w)));
    }
    const WordSet s4 = essential_words(rep, 4);
    for (const char* w : {"Baab", "BaaB", "BAAB", "bAAB", "BAAb", "bAAb", "baab", "baaB"}) CHECK_MESSAGE(s4.contains(w), w);
    CHECK_FALSE(s4.contains("BB"));
    CHECK_FALSE(s4.contains("BABB"));
    const WordSet s6 = essential_words(generators(6), 5);
    CHECK(s6.contains("BaBaB"));
    CHECK(s6.contains("bAbAb"));
    for (const auto& w : standard_word_set(6).words) CHECK_MESSAGE(s6.contains(w), w);
}

TEST_CASE("word evaluation") {
    for (int n : {4, 6}) {
        const RepresentationBundle rep = generators(n);
        CHECK(eval_word(rep, "").matrix == Mat3c::Identity());
        CHECK(identity_deviation(eval_word(rep, "BBB").matrix) < 1e-12);
        CHECK_THROWS_AS(eval_word(rep, "BxB"), Error);
        for (const auto& w : standard_word_set(n).words) {
            const Mat3c M = eval_word(rep, w).matrix, Mi = eval_word(rep, inverse_word(w)).matrix;
            CHECK(identity_deviation(M * Mi) < 1e-12);
        }
    }
    const RepresentationBundle rep = generators(4);
    CHECK(eval_word_exact(rep, "BBB") == Mat3q::Identity());
    // bAb and ABaBa differ by a left power of A, hence share an isometric sphere
    const Mat3c M = eval_word(rep, "bAb").matrix * su21_inverse(eval_word(rep, "ABaBa").matrix);
    CHECK(as_a_power(rep, M).has_value());
    const Mat3c N = eval_word(rep, "bab").matrix * su21_inverse(eval_word(rep, "aBABA").matrix);
    CHECK(as_a_power(rep, N).has_value());
}
