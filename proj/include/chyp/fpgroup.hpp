// Finitely presented groups: Tietze moves, abelianization, coset enumeration,
// low-index profiles and graded isomorphism verdicts.
#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chyp {

// Letters are +i / -i for generator i (1-based).
using Word = std::vector<int>;

struct Presentation {
    int ngens = 0;
    std::vector<Word> relators;
    int total_length() const;
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
// Least rotation of w and of w^-1, the key of w as a cyclic word up to inversion.
Word cyclic_key(const Word& w);
bool cyclically_equal(const Word& a, const Word& b);
Word word_power(const Word& w, int e);

// "x1,X2,x2" with X the inverse; the empty word is "".
std::string format_word(const Word& w);
Word parse_word(std::string_view s);
// First line ngens, then one relator per line.
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);
// Brace form for display, e.g. <x1,x2 | x1^3 X2 ...>.
std::string pretty_presentation(const Presentation& p);

// Free and cyclic reduction, empty and duplicate relators removed.
Presentation normalize(const Presentation& p);
Presentation tietze_simplify(const Presentation& p, int budget = 1000);

struct Abelianization {
    int free_rank = 0;
    std::vector<std::string> torsion;  // invariant factors > 1, decimal
    std::string to_string() const;     // "Z", "Z^2 + Z/2", "0"
    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};
// Smith invariants of an integer matrix given by rows.
std::vector<std::string> smith_invariants(const std::vector<std::vector<long long>>& rows, int cols);
Abelianization abelianization(const Presentation& p);

struct CosetTable {
    int ngens = 0;
    // rows[c][2i] = c.x_{i+1}, rows[c][2i+1] = c.x_{i+1}^-1; -1 undefined
    std::vector<std::vector<int>> rows;
    bool complete = false;
    int index() const { return static_cast<int>(rows.size()); }
};
// Throws CosetLimitExceeded when more than max_cosets cosets are live.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, int max_cosets = 100000);

struct ProfileEntry {
    int index = 0;
    int classes = 0;                         // conjugacy classes of subgroups
    std::vector<std::string> abelianizations;  // one per class, sorted
    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};
struct LowIndexProfile {
    int max_index = 0;
    std::vector<ProfileEntry> entries;  // index 1..max_index
    std::string to_string() const;
    friend bool operator==(const LowIndexProfile&, const LowIndexProfile&) = default;
};
// Throws SearchBudgetExceeded past node_budget search nodes.
LowIndexProfile low_index_profile(const Presentation& p, int max_index, long long node_budget = 50000000);
// First index at which the profiles differ, 0 when they agree up to the common bound.
int first_difference(const LowIndexProfile& a, const LowIndexProfile& b);

// Automorphism of the free group by generator images.
struct FreeMap {
    std::vector<Word> images;
    Word apply(const Word& w) const;
    std::string to_string() const;  // "x1->x1,x2 ; x2->X1"
};
// Whitehead-minimal form of a cyclic word and the automorphism reaching it.
struct WhiteheadReduction {
    Word minimal;
    FreeMap map;
};
WhiteheadReduction whitehead_reduce(const Word& w, int ngens);
// Automorphisms taking r1 and r2 to one cyclic word up to inversion, found by a
// search over the Whitehead-minimal orbit of r1.
bool whitehead_equivalent(const Word& r1, const Word& r2, int ngens, FreeMap* map1 = nullptr,
                          FreeMap* map2 = nullptr, int orbit_cap = 200000);

struct Distinguished {
    std::string witness;
};
struct StrongEvidence {
    std::vector<std::string> invariants;
};
struct HomomorphismCertified {
    std::vector<std::string> maps;        // each side to the common one-relator form
    std::vector<std::string> invariants;
};
using MatchVerdict = std::variant<Distinguished, StrongEvidence, HomomorphismCertified>;
const char* verdict_name(const MatchVerdict& v);
// 0 Distinguished, 1 StrongEvidence, 2 HomomorphismCertified
int verdict_rank(const MatchVerdict& v);
std::string verdict_details(const MatchVerdict& v);

struct MatchOptions {
    int profile_index = 6;
};
MatchVerdict match_presentations(const Presentation& p1, const Presentation& p2, const MatchOptions& opt = {});

// Census groups by name: "m038", "s090".
Presentation census_group(std::string_view name);

}  // namespace chyp
