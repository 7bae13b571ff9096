#include "doctest.h"

#include "fixtures.hpp"

#include "chyp/spine.hpp"
#include "chyp/words.hpp"

#include <algorithm>

using namespace chyp;

namespace {

struct Setup4 {
    PartialDomain d = build_partial_domain(generators(4), standard_word_set(4));
    BoundaryComplex bc;
    std::vector<RidgeCycle> cycles;
    QuotientComplex q;
    Setup4() {
        bc = ideal_boundary(d);
        cycles = ridge_cycles(bc);
        q = quotient_complex(bc, cycles);
    }
};

const Setup4& setup4() {
    static const Setup4 s;
    return s;
}

std::vector<std::string> sorted_classes(const std::vector<std::string>& relations) {
    std::vector<std::string> out;
    for (const auto& r : relations) out.push_back(relation_class(r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("ideal boundary of n=4 is a torus") {
    const auto& s = setup4();
    CHECK(s.bc.vertices.size() == 20);
    CHECK(s.bc.edges.size() == 30);
    CHECK(s.bc.faces.size() == 10);
    CHECK(s.bc.euler() == 0);
}

TEST_CASE("spinal_value vanishes on the edges") {
    const auto& s = setup4();
    for (const auto& e : s.bc.edges) {
        const auto& S1 = s.d.spheres[static_cast<std::size_t>(e.s1)].sphere;
        const auto& S2 = s.d.spheres[static_cast<std::size_t>(e.s2)].sphere;
        for (const auto& p : e.points) {
            CHECK(std::abs(spinal_value(S1, p)) < 1e-6 * std::pow(S1.radius, 4));
            CHECK(std::abs(spinal_value(S2, p)) < 1e-6 * std::pow(S2.radius, 4));
        }
    }
}

TEST_CASE("A translation law") {
    const Heis3 p(0.3, -1.2, 2.5);
    CHECK((a_translate(a_translate(p, 2), -2) - p).norm() < 1e-14);
    const HeisPoint h = a_power(from_heis3(p), 3);
    CHECK((to_heis3(h) - a_translate(p, 3)).norm() < 1e-12);
}

TEST_CASE("face adjacency of n=4") {
    const auto m = match_adjacency(setup4().bc, fixtures::adjacency4);
    CHECK(m.all_rows);
    CHECK(m.all_faces);
}

TEST_CASE("ridge cycles of n=4") {
    const auto& s = setup4();
    REQUIRE(s.cycles.size() == 10);
    std::vector<std::string> rel;
    for (const auto& c : s.cycles) {
        rel.push_back(c.relation);
        CHECK(c.steps.size() == 3);
        CHECK(c.deviation < 1e-9);
        CHECK(identity_deviation(matrix_power(c.transformation, c.order)) < 1e-9);
    }
    CHECK(sorted_classes(rel) == sorted_classes(fixtures::cycle_relations4));
}

TEST_CASE("quotient complex of n=4") {
    const auto& q = setup4().q;
    CHECK(q.n_edge_classes == 10);
    CHECK(q.n_vertex_classes == 5);
    CHECK(q.disks.size() == 5);
    for (int c : q.class_sizes()) CHECK(c == 3);
}

TEST_CASE("strips of n=4") {
    const auto& s = setup4();
    const auto target = fixtures::class_sizes(fixtures::edge_labels4);
    const StripSearch ss = search_strips(s.bc, s.q, target, 3000, 1);
    CHECK(ss.minimal.connected);
    CHECK(ss.minimal.drawn_edges == 42);
    REQUIRE(ss.realizing);
    CHECK(ss.realizing->drawn_edges == 45);
    CHECK(static_cast<int>(ss.realizing->drawn_edges - fixtures::glued4.size()) == ss.minimal.drawn_edges);
    auto a = ss.realizing->sizes, b = target;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("no parabolic fixes a point of the boundary, n=4") {
    const auto& s = setup4();
    CHECK(check_no_boundary_parabolics(s.bc, s.cycles).clean());
}

TEST_CASE("spine of n=4") {
    const auto& s = setup4();
    const SpineComplex sp = build_spine(s.bc, s.q);
    CHECK(sp.n_vertices == 5);
    CHECK(sp.n_edges() == 10);
    CHECK(sp.rank() == 6);
    CHECK(sp.euler() == 0);
    CHECK(sp.disks_closed());
    CHECK(sp.presentation().ngens == 6);
    CHECK(sp.presentation().relators.size() == 5);
    const SpineMatch m = match_spine(sp, fixtures::spine4());
    CHECK(m.graph);
    CHECK(m.disks);
    CHECK(m.relations);
    CHECK(m.table_distinct_disks == 5);
}

TEST_CASE("table relations follow from the table loops") {
    const auto t = fixtures::spine4();
    const auto rel = table_relations(t);
    REQUIRE(rel.size() == t.relations.size());
    for (std::size_t i = 0; i < rel.size(); ++i) CHECK(cyclically_equal(rel[i], t.relations[i]));
}

TEST_CASE("spine presentation of n=4 simplifies to one relator") {
    const auto& s = setup4();
    const Presentation p = tietze_simplify(build_spine(s.bc, s.q).presentation());
    CHECK(p.ngens == 2);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].size() == 11);
    CHECK(abelianization(p).to_string() == "Z");
    CHECK(whitehead_equivalent(p.relators[0], parse_word(fixtures::final_relator4), 2));
}
