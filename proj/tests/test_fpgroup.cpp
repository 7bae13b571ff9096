#include "doctest.h"

#include "fixtures.hpp"

#include "chyp/errors.hpp"
#include "chyp/fpgroup.hpp"

using namespace chyp;

namespace {

// x1 -> x1 x2 on every relator.
Presentation nielsen(const Presentation& p) {
    FreeMap f;
    for (int i = 1; i <= p.ngens; ++i) f.images.push_back(i == 1 ? Word{1, 2} : Word{i});
    Presentation out{p.ngens, {}};
    for (const auto& r : p.relators) out.relators.push_back(f.apply(r));
    return out;
}

}  // namespace

TEST_CASE("word formatting round trips") {
    const Word w = parse_word("x1,X2,x2,x1");
    CHECK(w == Word{1, -2, 2, 1});
    CHECK(format_word(w) == "x1,X2,x2,x1");
    CHECK(free_reduce(w) == Word{1, 1});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("y1"), Error);
    const Presentation p = parse_presentation("2\nx1,x1,X2\nx2,x2\n");
    CHECK(p.ngens == 2);
    CHECK(p.relators.size() == 2);
    CHECK(parse_presentation(format_presentation(p)) == p);
}

TEST_CASE("cyclic words") {
    CHECK(cyclic_reduce(Word{-1, 2, 1}) == Word{2});
    CHECK(cyclically_equal(Word{1, 2, -1}, Word{2, -1, 1}));
    CHECK(cyclically_equal(Word{1, 2}, Word{-2, -1}));
    CHECK(word_power(Word{1, 2}, -2) == Word{-2, -1, -2, -1});
}

TEST_CASE("Tietze on small presentations") {
    const Presentation z{1, {}};
    CHECK(tietze_simplify(z) == z);
    const Presentation xy{2, {{2}}};
    const Presentation out = tietze_simplify(xy);
    CHECK(out.ngens == 1);
    CHECK(out.relators.empty());
}

TEST_CASE("abelianizations") {
    CHECK(abelianization({1, {{1, 1}}}).to_string() == "Z/2");
    CHECK(abelianization({1, {}}).to_string() == "Z");
    CHECK(abelianization({2, {}}).to_string() == "Z^2");
    CHECK(abelianization({1, {{1}}}).to_string() == "0");
    CHECK(abelianization({2, {{1, 1, 2, 2, 2, 2}}}).to_string() == "Z + Z/2");
    CHECK(abelianization(census_group("m038")).to_string() == "Z");
    CHECK(abelianization(census_group("s090")).to_string() == "Z");
}

TEST_CASE("coset enumeration") {
    CHECK(todd_coxeter({1, {{1, 1, 1}}}, {}).index() == 3);
    CHECK(todd_coxeter({2, {}}, {{1}, {2}}).index() == 1);
    CHECK(todd_coxeter({2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}}, {}).index() == 6);
    std::string outcome;
    try {
        outcome = "index " + std::to_string(todd_coxeter(census_group("m038"), {{1}}, 100000).index());
    } catch (const Error& e) {
        outcome = e.what();
    }
    MESSAGE("m038 over <x1> with 100000 cosets: " << outcome);
}

TEST_CASE("low-index profiles") {
    const LowIndexProfile z = low_index_profile({1, {}}, 3);
    REQUIRE(z.entries.size() == 3);
    for (const auto& e : z.entries) CHECK(e.classes == 1);
    const LowIndexProfile f2 = low_index_profile({2, {}}, 5);
    std::vector<int> counts;
    for (const auto& e : f2.entries) counts.push_back(e.classes);
    CHECK(counts == std::vector<int>{1, 3, 7, 26, 97});
    const LowIndexProfile s3 = low_index_profile({2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}}, 6);
    CHECK(s3.entries[1].classes == 1);
    CHECK(s3.entries[2].classes == 1);
    CHECK(s3.entries[5].classes == 1);
    CHECK(s3.entries[3].classes == 0);
}

TEST_CASE("invariants are Nielsen invariant") {
    const Presentation m = census_group("m038");
    const Presentation n = nielsen(m);
    CHECK(abelianization(n) == abelianization(m));
    CHECK(low_index_profile(n, 5) == low_index_profile(m, 5));
}

TEST_CASE("Whitehead reduction") {
    const Word r = census_group("m038").relators[0];
    const WhiteheadReduction w = whitehead_reduce(r, 2);
    CHECK(w.minimal.size() <= r.size());
    CHECK(cyclically_equal(cyclic_reduce(w.map.apply(r)), w.minimal));
    const Presentation n = nielsen(census_group("m038"));
    CHECK(whitehead_equivalent(r, n.relators[0], 2));
}

TEST_CASE("census verdicts") {
    const Presentation m = census_group("m038"), s = census_group("s090");
    const Presentation found{2, {parse_word(fixtures::final_relator4)}};
    const MatchVerdict v = match_presentations(found, m);
    CHECK(std::string(verdict_name(v)) == "HomomorphismCertified");
    const MatchVerdict x = match_presentations(m, s), y = match_presentations(s, m);
    CHECK(std::string(verdict_name(x)) == "Distinguished");
    CHECK(verdict_rank(x) == verdict_rank(y));
    CHECK(verdict_rank(match_presentations(m, found)) == verdict_rank(v));
    CHECK(first_difference(low_index_profile(m, 5), low_index_profile(s, 5)) > 0);
}
