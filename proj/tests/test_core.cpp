#include "doctest.h"

#include "chyp/core.hpp"
#include "chyp/reps.hpp"

#include <random>

using namespace chyp;

namespace {

using Q = GaussRational;

Vec3c random_vec(std::mt19937& g) {
    std::uniform_real_distribution<double> d(-1, 1);
    return Vec3c(Cx(d(g), d(g)), Cx(d(g), d(g)), Cx(d(g), d(g)));
}

HeisPoint random_heis(std::mt19937& g) {
    std::uniform_real_distribution<double> d(-3, 3);
    return {Cx(d(g), d(g)), d(g)};
}

// V(e^{-i pi/3}, 1) on the (b, AbAB) chart. The printed third coordinate reads +i;
// only -i gives the stated norm.
Vec3c sample_x0() {
    const double r3 = std::sqrt(3.0);
    return Vec3c(Cx(5.0 / 4 + r3 / 4, -0.25 + r3 / 4), Cx(-0.75 + r3 / 2, -0.5 + r3 / 4), Cx(0, -1));
}

}  // namespace

TEST_CASE("hermitian form basics") {
    CHECK(hermitian_form(q_infinity<Cx>(), q_infinity<Cx>()) == Cx(0));
    const Vec3c e2(0, 1, 0);
    CHECK(hermitian_form(e2, e2) == Cx(1));
    const Cx n = hermitian_form(sample_x0(), sample_x0());
    CHECK(n.real() == doctest::Approx(9.0 / 4 - 1.5 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::abs(n.imag()) < 1e-14);
}

TEST_CASE("hermitian symmetry, float and exact") {
    std::mt19937 g(7);
    for (int i = 0; i < 100; ++i) {
        const Vec3c z = random_vec(g), w = random_vec(g);
        CHECK(std::abs(hermitian_form(z, w) - std::conj(hermitian_form(w, z))) < 1e-14);
    }
    const Vec3q z(Q(Rational(1, 3), Rational(2)), Q(-1), Q(Rational(0), Rational(5, 7)));
    const Vec3q w(Q(2), Q(Rational(1, 2), Rational(-1, 2)), Q(Rational(3), Rational(1)));
    CHECK(hermitian_form(z, w) == conjugate(hermitian_form(w, z)));
}

TEST_CASE("classify_vector") {
    CHECK(classify_vector(Vec3c(1, 0, 0), 1e-10) == SignClass::Null);
    CHECK(classify_vector(to_lift(HoroPoint{0, 0, 1}), 1e-10) == SignClass::Negative);
    CHECK(hermitian_form(to_lift(HoroPoint{0, 0, 1}), to_lift(HoroPoint{0, 0, 1})).real() == doctest::Approx(-1));
    CHECK(classify_vector(Vec3c(0, 1, 0), 1e-10) == SignClass::Positive);
    CHECK(classify_vector(Vec3q(Q(1), Q(0), Q(0))) == SignClass::Null);
    CHECK_THROWS_AS(classify_vector(Vec3c(0, 0, 0), 1e-10), Error);
}

TEST_CASE("box product") {
    CHECK(box_product(Vec3c(1, 0, 0), Vec3c(0, 1, 0)) == Vec3c(1, 0, 0));
    std::mt19937 g(11);
    for (int i = 0; i < 100; ++i) {
        const Vec3c p = random_vec(g), q = random_vec(g);
        CHECK(box_product(p, p).norm() == 0.0);
        const Vec3c b = box_product(p, q);
        CHECK(std::abs(hermitian_form(b, p)) < 1e-12);
        CHECK(std::abs(hermitian_form(b, q)) < 1e-12);
    }
    const Vec3q p(Q(1), Q(Rational(0), Rational(2)), Q(3)), q(Q(0), Q(1), Q(-1));
    const Vec3q b = box_product(p, q);
    CHECK(hermitian_form(b, p) == Q(0));
    CHECK(hermitian_form(b, q) == Q(0));
}

TEST_CASE("horospherical lifts") {
    CHECK(to_lift(HoroPoint{0, 0, 0}) == Vec3c(0, 0, 1));
    const Vec3c c = to_lift(HoroPoint{Cx(1, -1), 4, 0});
    CHECK(std::abs(c(0) - Cx(-1, 2)) < 1e-15);
    CHECK(std::abs(c(1) - Cx(1, -1)) < 1e-15);
    const Vec3q cq = to_lift(HoroPointT<Q>{Q(Rational(1), Rational(-1)), Rational(4), Rational(0)});
    CHECK(cq(0) == Q(Rational(-1), Rational(2)));
    std::mt19937 g(3);
    std::uniform_real_distribution<double> d(0, 2);
    for (int i = 0; i < 100; ++i) {
        const HeisPoint p = random_heis(g);
        const HoroPoint h{p.z, p.t, d(g)};
        const HoroPoint back = from_lift(Vec3c(Cx(2.5, -1) * to_lift(h)));
        CHECK(std::abs(back.z - h.z) < 1e-12);
        CHECK(back.t == doctest::Approx(h.t).epsilon(1e-12));
        CHECK(back.u == doctest::Approx(h.u).epsilon(1e-12));
    }
    CHECK_THROWS_AS(from_lift(q_infinity<Cx>()), Error);
    CHECK_THROWS_AS(from_lift_checked(Vec3c(0, 1, 1), 1e-10), Error);
}

TEST_CASE("Heisenberg group law") {
    const HeisPoint z{Cx(0.3, -1.2), 0.7};
    const HeisPoint o{};
    CHECK(heis_mul(o, z) == z);
    const HeisPoint p = heis_mul(HeisPoint{1, 0}, HeisPoint{Cx(0, 1), 0});
    CHECK(p.z == Cx(1, 1));
    CHECK(p.t == -2.0);
    const HeisPoint e = heis_mul(z, heis_inverse(z));
    CHECK(std::abs(e.z) == 0.0);
    CHECK(e.t == 0.0);
    // exact associativity
    const HeisPointQ a{Q(Rational(1, 2), Rational(3)), Rational(-2, 5)};
    const HeisPointQ b{Q(Rational(-7), Rational(1, 3)), Rational(4)};
    const HeisPointQ c{Q(Rational(2, 9), Rational(-1, 4)), Rational(1, 7)};
    CHECK(heis_mul(heis_mul(a, b), c) == heis_mul(a, heis_mul(b, c)));
    CHECK(heis_mul(a, heis_inverse(a)) == HeisPointQ{});
}

TEST_CASE("Heisenberg translations") {
    CHECK(heis_translation_matrix(HeisPoint{}) == Mat3c::Identity());
    const HeisPoint v = act(heis_translation_matrix(HeisPoint{0, 1}), HeisPoint{});
    CHECK(std::abs(v.z) < 1e-15);
    CHECK(v.t == doctest::Approx(1.0));
    const Vec3c img = heis_translation_matrix(HeisPoint{1, 2}) * Vec3c(0, 0, 1);
    CHECK((img - to_lift(HeisPoint{1, 2})).norm() < 1e-15);
    std::mt19937 g(5);
    for (int i = 0; i < 50; ++i) {
        const HeisPoint a = random_heis(g), b = random_heis(g);
        const Mat3c T = heis_translation_matrix(a);
        CHECK(is_su21(T, 1e-12));
        const HeisPoint ab = act(T, b), ref = heis_mul(a, b);
        CHECK(std::abs(ab.z - ref.z) < 1e-12);
        CHECK(ab.t == doctest::Approx(ref.t).epsilon(1e-12));
    }
}

TEST_CASE("Cygan distance") {
    const HoroPoint p{Cx(0.5, 1), -2, 0.3};
    CHECK(cygan_distance(p, p) == 0.0);
    const HeisPoint z{Cx(1, 2), 3};
    CHECK(cygan_distance(HeisPoint{}, z) == doctest::Approx(std::pow(std::abs(Cx(5, 3)), 0.5)));
    CHECK(heis_norm(z) == doctest::Approx(std::pow(std::abs(Cx(5, 3)), 0.5)));
    std::mt19937 g(9);
    for (int i = 0; i < 100; ++i) {
        const HeisPoint a = random_heis(g), b = random_heis(g), h = random_heis(g);
        CHECK(cygan_distance(heis_mul(h, a), heis_mul(h, b)) == doctest::Approx(cygan_distance(a, b)).epsilon(1e-12));
        CHECK(cygan_distance(a, b) == doctest::Approx(cygan_distance(b, a)).epsilon(1e-14));
    }
}

TEST_CASE("Bergman distance invariance") {
    const RepresentationBundle rep = generators(4);
    std::mt19937 g(13);
    std::uniform_real_distribution<double> d(0.1, 2);
    for (int i = 0; i < 50; ++i) {
        const HeisPoint a = random_heis(g), b = random_heis(g);
        const HoroPoint p{a.z, a.t, d(g)}, q{b.z, b.t, d(g)};
        const double rho = bergman_distance(p, q);
        for (const Mat3c& M : {rep.A.matrix, rep.B.matrix}) {
            const HoroPoint gp = from_lift(Vec3c(M * to_lift(p))), gq = from_lift(Vec3c(M * to_lift(q)));
            CHECK(bergman_distance(gp, gq) == doctest::Approx(rho).epsilon(1e-10));
        }
    }
    const HoroPoint p{Cx(0.1), 0.2, 0.5};
    CHECK(bergman_distance(p, p) == doctest::Approx(0.0));
    CHECK_THROWS_AS(bergman_distance(HoroPoint{0, 0, 0}, p), Error);
}

TEST_CASE("isometry classification") {
    const RepresentationBundle rep = generators(4);
    const IsometryClass ca = classify_isometry(rep.A.matrix, 1e-9);
    REQUIRE(std::holds_alternative<Parabolic>(ca));
    CHECK(std::get<Parabolic>(ca).unipotent);
    const IsometryClass cb = classify_isometry(rep.B.matrix, 1e-9);
    REQUIRE(std::holds_alternative<Elliptic>(cb));
    CHECK(std::get<Elliptic>(cb).regular);
    Mat3c L = Mat3c::Zero();
    L(0, 0) = 2;
    L(1, 1) = 1;
    L(2, 2) = 0.5;
    CHECK(std::holds_alternative<Loxodromic>(classify_isometry(L, 1e-9)));
    for (const Mat3c& M : {rep.A.matrix, rep.B.matrix, L, Mat3c(rep.A.matrix * rep.B.matrix), rep.I1.matrix}) {
        CHECK(std::string(to_string(classify_isometry(M, 1e-9))) ==
              std::string(to_string(classify_isometry(su21_inverse(M), 1e-9))));
    }
    // a complex reflection is special elliptic
    const IsometryClass ci = classify_isometry(rep.I1.matrix, 1e-9);
    REQUIRE(std::holds_alternative<Elliptic>(ci));
    CHECK_FALSE(std::get<Elliptic>(ci).regular);
}

TEST_CASE("complex reflections") {
    const Mat3q I = complex_reflection(Vec3q(Q(0), Q(1), Q(0)));
    Mat3q I1 = Mat3q::Zero();
    I1(0, 0) = Q(-1);
    I1(1, 1) = Q(1);
    I1(2, 2) = Q(-1);
    CHECK(I == I1);
    std::mt19937 g(17);
    int tested = 0;
    while (tested < 50) {
        const Vec3c c = random_vec(g);
        if (hermitian_form(c, c).real() < 0.05) continue;
        ++tested;
        const Mat3c R = complex_reflection(c);
        CHECK((R * R - Mat3c::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((R * c - c).norm() < 1e-10);
        CHECK(is_su21(R, 1e-9));
    }
    CHECK_THROWS_AS(complex_reflection(Vec3c(1, 0, 0)), Error);
}

TEST_CASE("polar vector of a C-circle") {
    const Vec3q p = polar_vector_of_ccircle(HeisPointQ{Q(0), Rational(0)}, Rational(1));
    CHECK(p == Vec3q(Q(Rational(1, 2)), Q(0), Q(1)));
    const Vec3q p2 = polar_vector_of_ccircle(HeisPointQ{Q(Rational(1), Rational(1)), Rational(2)}, Rational(1));
    CHECK(p2(0) == Q(Rational(-1, 2), Rational(1)));
    CHECK(p2(1) == Q(Rational(1), Rational(1)));
    std::mt19937 g(19);
    std::uniform_real_distribution<double> d(0.01, 3);
    for (int i = 0; i < 100; ++i) {
        const Vec3c v = polar_vector_of_ccircle(random_heis(g), d(g));
        CHECK(classify_vector(v, 1e-10) == SignClass::Positive);
    }
    CHECK_THROWS_AS(polar_vector_of_ccircle(HeisPoint{}, 0.0), Error);
}

TEST_CASE("action of A on the Heisenberg group") {
    const HeisPoint o = a_action(HeisPoint{});
    CHECK(o.z == Cx(-2, 0));
    CHECK(o.t == 0.0);
    // A = T_(-2,0): a real shift leaves t unchanged, a shift with Im z != 0 does not.
    const HeisPoint p = a_action(HeisPoint{Cx(1, 0), 0});
    CHECK(p.z == Cx(-1, 0));
    CHECK(p.t == 0.0);
    const HeisPoint q = a_action(HeisPoint{Cx(0, 1), 0});
    CHECK(q.t == 4.0);
    const RepresentationBundle rep = generators(4);
    std::mt19937 g(23);
    for (int i = 0; i < 100; ++i) {
        const HeisPoint h = random_heis(g);
        const HeisPoint m = act(rep.A.matrix, h), f = a_action(h);
        CHECK(std::abs(m.z - f.z) < 1e-12);
        CHECK(std::abs(m.t - f.t) < 1e-12);
    }
    const HeisPointQ e = a_power(HeisPointQ{Q(Rational(7, 5), Rational(-1, 5)), Rational(0)}, 1);
    CHECK(e == HeisPointQ{Q(Rational(-3, 5), Rational(-1, 5)), Rational(-4, 5)});
}

TEST_CASE("generators lie in SU(2,1)") {
    const RepresentationBundle rep = generators(4);
    REQUIRE(rep.exact);
    CHECK(is_su21(rep.exact->A));
    CHECK(is_su21(rep.exact->B));
    CHECK(is_su21(rep.exact->I3));
    const RepresentationBundle r6 = generators(6);
    CHECK(is_su21(r6.B.matrix, 1e-12));
    CHECK(is_su21(r6.A.matrix, 1e-12));
}
