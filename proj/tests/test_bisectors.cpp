#include "doctest.h"

#include "chyp/bisectors.hpp"
#include "chyp/errors.hpp"
#include "chyp/words.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace chyp;

namespace {

const RepresentationBundle& rep4() {
    static const RepresentationBundle b = generators(4);
    return b;
}

IsometricSphere sphere4(const std::string& w, int k = 0) {
    return translate_sphere(isometric_sphere(rep4(), w), k, rep4().A.matrix);
}

GiraudChart chart(const char* w1, const char* w2) {
    return make_giraud(eval_word(rep4(), w1), eval_word(rep4(), w2));
}

bool near_root(const TorusPoint& p, double x1, double y1, double x2, double y2) {
    return std::abs(std::cos(p.t1) - x1) < 1e-5 && std::abs(std::sin(p.t1) - y1) < 1e-5 &&
           std::abs(std::cos(p.t2) - x2) < 1e-5 && std::abs(std::sin(p.t2) - y2) < 1e-5;
}

}  // namespace

TEST_CASE("sphere of B") {
    const IsometricSphere s = isometric_sphere(rep4(), "B");
    CHECK(s.center.z.real() == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.center.z.imag() == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::abs(s.center.t) < 1e-12);
    CHECK(s.radius == doctest::Approx(2).epsilon(1e-12));
}

TEST_CASE("spheres of b and baB") {
    const IsometricSphere b = isometric_sphere(rep4(), "b");
    CHECK(b.center.z.real() == doctest::Approx(1));
    CHECK(b.center.z.imag() == doctest::Approx(-1));
    CHECK(b.center.t == doctest::Approx(4));
    CHECK(b.radius == doctest::Approx(2));
    const IsometricSphere s = isometric_sphere(rep4(), "baB");
    CHECK(s.center.z.real() == doctest::Approx(1.4));
    CHECK(s.center.z.imag() == doctest::Approx(0.2));
    CHECK(s.center.t == doctest::Approx(4));
    CHECK(s.radius == doctest::Approx(2 / std::pow(5.0, 0.25)));
}

TEST_CASE("the identity has no isometric sphere") {
    CHECK_THROWS_AS(isometric_sphere(rep4(), "A"), Error);
}

TEST_CASE("translate_sphere agrees with conjugation") {
    const IsometricSphere s = isometric_sphere(rep4(), "B");
    CHECK(same_sphere(translate_sphere(s, 0, rep4().A.matrix), s));
    for (int k : {-2, -1, 1, 2}) {
        const IsometricSphere t = translate_sphere(s, k, rep4().A.matrix);
        CHECK(t.radius == doctest::Approx(2));
        CHECK(same_sphere(t, isometric_sphere(rep4(), conjugate_by_A("B", k))));
    }
}

TEST_CASE("pairs of spheres around I_B") {
    const IsometricSphere B = sphere4("B");
    CHECK(spheres_intersect(B, sphere4("B", 1)));
    CHECK(spheres_intersect(B, sphere4("B", -1)));
    CHECK_FALSE(spheres_intersect(B, sphere4("B", 2)));
    CHECK(spheres_intersect(B, sphere4("b", 0)));
    CHECK_FALSE(spheres_intersect(B, sphere4("b", 3)));
}

TEST_CASE("sample point of the ridge of I_B and I_baB^1") {
    const GiraudChart c = chart("b", "AbAB");
    const double v = giraud_norm(c, {-std::numbers::pi / 3, 0});
    CHECK(v == doctest::Approx(9.0 / 4 - 1.5 * std::sqrt(3.0)).epsilon(1e-12));
    const Vec3c V = c.V(-std::numbers::pi / 3, 0);
    const Vec3c X = V * (Cx(0, -1) / V(2));
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(X(0) - Cx(1.25 + s3 / 4, -0.25 + s3 / 4)) < 1e-12);
    CHECK(std::abs(X(1) - Cx(-0.75 + s3 / 2, -0.5 + s3 / 4)) < 1e-12);
    CHECK(std::abs(X(2) - Cx(0, -1)) < 1e-12);
}

TEST_CASE("the Giraud norm is real and the disk nonempty") {
    const GiraudChart c = chart("b", "AbAB");
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    for (int i = 0; i < 100; ++i) {
        const Vec3c V = c.V(u(rng), u(rng));
        CHECK(std::abs(hermitian_form(V, V).imag()) < 1e-12);
    }
    double best = 1e300;
    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b)
            best = std::min(best, giraud_norm(c, {2 * std::numbers::pi * a / 256, 2 * std::numbers::pi * b / 256}));
    CHECK(best < 0);
}

TEST_CASE("the disk of I_B and I_baB^1 lies inside I_b") {
    const GiraudChart c = chart("b", "AbAB");
    const IsometricSphere b = isometric_sphere(rep4(), "b");
    CHECK(form_intersections(norm_form(c), sphere_form(c, b)).empty());
    const DiskTest t = disk_inside_sphere(c, b);
    CHECK(t.position == DiskPosition::Inside);
    CHECK_FALSE(t.tangency);
}

TEST_CASE("boundary roots on the ridge of I_B and I_Bab^1") {
    const GiraudChart c = chart("b", "ABAb");
    const auto aba = form_intersections(norm_form(c), sphere_form(c, isometric_sphere(rep4(), "Aba")));
    REQUIRE(aba.size() == 2);
    auto has = [](const std::vector<TorusPoint>& ps, double x1, double y1, double x2, double y2) {
        return std::any_of(ps.begin(), ps.end(), [&](const TorusPoint& p) { return near_root(p, x1, y1, x2, y2); });
    };
    CHECK(has(aba, 0.378005, -0.925803, 0.960944, 0.276744));
    CHECK(has(aba, 0.987712, 0.156285, -0.872037, 0.48944));
    const auto bab = form_intersections(norm_form(c), sphere_form(c, isometric_sphere(rep4(), "BAB")));
    REQUIRE(bab.size() == 2);
    CHECK(has(bab, 0.987712, -0.156285, -0.784829, 0.619713));
    CHECK(has(bab, 0.378005, 0.925803, 0.107031, 0.994256));
    const TorusForm n = norm_form(c);
    for (const auto& ps : {aba, bab})
        for (const auto& p : ps) {
            CHECK(std::abs(std::norm(p.z1()) - 1) < 1e-12);
            CHECK(std::abs(std::norm(p.z2()) - 1) < 1e-12);
            CHECK(std::abs(n(p)) < 1e-10 * n.scale());
        }
}

TEST_CASE("the disk of I_B and I_Bab^1 lies outside I_aBA") {
    const GiraudChart c = chart("b", "ABAb");
    const IsometricSphere s = isometric_sphere(rep4(), "aBA");
    CHECK(form_intersections(norm_form(c), sphere_form(c, s)).empty());
    CHECK(disk_inside_sphere(c, s).position == DiskPosition::Outside);
}

TEST_CASE("inequality form of the disk of I_B and I_Bab^1") {
    const GiraudChart c = chart("b", "ABAb");
    const TorusForm n = norm_form(c);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    for (int i = 0; i < 50; ++i) {
        const double t1 = u(rng), t2 = u(rng);
        const Cx z1 = std::polar(1.0, t1), z2 = std::polar(1.0, t2);
        const double printed = (11.0 / 4 - 2.5 * z1 - Cx(0.5, -1) * z2 - Cx(0.5, -1) * z2 * std::conj(z1)).real();
        CHECK(n(t1, t2) == doctest::Approx(printed).epsilon(1e-12).scale(1));
    }
}

TEST_CASE("trace curves are symmetric in u and v") {
    const GiraudChart c = chart("b", "ABAb");
    const IsometricSphere s = isometric_sphere(rep4(), "Aba");
    const Vec3c q = q_infinity<Cx>();
    const TraceCurve a = trace_curve(c, q, s.lift), b = trace_curve(c, s.lift, q);
    CHECK(a.loops.size() == b.loops.size());
}

TEST_CASE("boundary roots are stable") {
    const GiraudChart c = chart("b", "ABAb");
    const IsometricSphere s = isometric_sphere(rep4(), "Aba");
    const auto r1 = form_intersections(norm_form(c), sphere_form(c, s));
    const auto r2 = form_intersections(sphere_form(c, s), norm_form(c));
    REQUIRE(r1.size() == r2.size());
    for (const auto& p : r1)
        CHECK(std::any_of(r2.begin(), r2.end(), [&](const TorusPoint& q) { return torus_distance(p, q) < 1e-8; }));
}
