#include "doctest.h"

#include "chyp/ford.hpp"
#include "chyp/words.hpp"

#include <set>

using namespace chyp;

namespace {

const PartialDomain& domain4() {
    static const PartialDomain d = build_partial_domain(generators(4), standard_word_set(4));
    return d;
}

int sphere_of(const PartialDomain& d, const std::string& w, int k) {
    const auto loc = d.locate(w, k);
    REQUIRE(loc);
    return d.index(loc->first, loc->second);
}

ArcLabel arc_of(const PartialDomain& d, const std::string& w, int k) {
    const auto loc = d.locate(w, k);
    REQUIRE(loc);
    return {false, loc->first, loc->second};
}

}  // namespace

TEST_CASE("families and translates of S*") {
    const PartialDomain& d = domain4();
    CHECK(d.families.size() == 8);
    CHECK(d.spheres.size() == 8 * 13);
    const std::set<std::string> fams(d.families.begin(), d.families.end());
    CHECK(fams == std::set<std::string>{"b", "B", "BAb", "Bab", "bAb", "bab", "baB", "bAB"});
}

TEST_CASE("aliases name one sphere") {
    const RepresentationBundle& b = domain4().bundle;
    CHECK(same_sphere(isometric_sphere(b, "bAb"), isometric_sphere(b, "ABaBa")));
    CHECK(same_sphere(isometric_sphere(b, "bab"), isometric_sphere(b, "aBABA")));
    const PartialDomain& d = domain4();
    CHECK(d.locate("BaB", 0) == d.locate("bAb", -1));
    CHECK(d.locate("BAB", 0) == d.locate("bab", 1));
}

TEST_CASE("translates meeting I_B") {
    const RepresentationBundle& b = domain4().bundle;
    const IsometricSphere B = isometric_sphere(b, "B");
    auto meets = [&](const std::string& w, int k) {
        return spheres_intersect(B, translate_sphere(isometric_sphere(b, w), k, b.A.matrix));
    };
    for (int k = -3; k <= 3; ++k) {
        CAPTURE(k);
        if (k != 0) CHECK(meets("B", k) == (std::abs(k) == 1));
        for (const char* w : {"b", "baB", "bAB", "BaB", "BAB", "BAb", "Bab"}) {
            CAPTURE(w);
            CHECK(meets(w, k) == (std::abs(k) <= 1));
        }
    }
}

TEST_CASE("ridge of I_B and I_Bab^1 is a triangle") {
    const PartialDomain& d = domain4();
    const RidgeRegion r = compute_ridge(d, sphere_of(d, "B", 0), sphere_of(d, "Bab", 1));
    CHECK(r.type() == "triangle+inf");
    REQUIRE(r.boundaries.size() == 1);
    const auto& sides = r.boundaries[0].sides;
    REQUIRE(sides.size() == 3);
    const ArcLabel inf{true, -1, 0};
    for (const ArcLabel& want : {inf, arc_of(d, "Aba", 0), arc_of(d, "BAB", 0)})
        CHECK(std::find(sides.begin(), sides.end(), want) != sides.end());
    CHECK(region_inside_sphere(d, r, isometric_sphere(d.bundle, "bAB")).position == DiskPosition::Outside);
    CHECK(region_inside_sphere(d, r, isometric_sphere(d.bundle, "aBA")).position == DiskPosition::Outside);
}

TEST_CASE("ridge of I_B and I_b is a dodecagon") {
    const PartialDomain& d = domain4();
    const RidgeRegion r = compute_ridge(d, sphere_of(d, "B", 0), sphere_of(d, "b", 0));
    CHECK(r.type() == "dodecagon");
    CHECK_FALSE(r.infinite());
}

TEST_CASE("ridge of I_B and I_baB^1 is hidden by I_b") {
    const PartialDomain& d = domain4();
    const RidgeRegion r = compute_ridge(d, sphere_of(d, "B", 0), sphere_of(d, "baB", 1));
    CHECK(r.empty());
}

TEST_CASE("side report of I_B") {
    const PartialDomain& d = domain4();
    const SideReport rep = side_report(d, sphere_of(d, "B", 0));
    CHECK(rep.infinite_count() == 14);
    const auto t = rep.type_counts();
    auto count = [&](const std::string& k) { return t.count(k) ? t.at(k) : 0; };
    CHECK(count("dodecagon") == 1);
    CHECK(count("triangle+inf") == 2);
    CHECK(count("quadrangle+inf") == 4);
    CHECK(count("pentagon+inf") == 4);
    CHECK(count("pentagon+inf&quadrangle") == 4);
    for (const auto& e : rep.entries) CHECK_FALSE(e.ridge.tangency);
}

TEST_CASE("x-axis segment is covered") {
    const AxisCheck ax = x_axis_check(domain4());
    CHECK(ax.pass);
    CHECK(ax.margin_left > 0);
    CHECK(ax.margin_right > 0);
}

TEST_CASE("pairings are the conjugated family words") {
    const PartialDomain& d = domain4();
    const auto loc = d.locate("B", 1);
    REQUIRE(loc);
    const GroupElement g = d.pairing(loc->first, loc->second);
    CHECK(projective_deviation(g.matrix, eval_word(d.bundle, conjugate_by_A("B", 1)).matrix) < 1e-9);
    CHECK(polygon_name(3) == "triangle");
    CHECK(polygon_name(12) == "dodecagon");
}
