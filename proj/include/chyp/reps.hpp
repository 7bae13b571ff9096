// Generator matrices of the even subgroup of Delta(3,4,n;inf), n = 4, 6.
#pragma once

#include "chyp/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chyp {

struct GroupElement {
    Mat3c matrix;
    std::string word;
};

template <class S> struct GeneratorSet {
    Mat3<S> I1, I2, I3, A, B;
};

struct RepresentationBundle {
    int n = 0;
    GroupElement I1, I2, I3, A, B;
    // Present when every generator has entries in Q(i) (n = 4).
    std::optional<GeneratorSet<GaussRational>> exact;
};

RepresentationBundle generators(int n);

// Polar vector of I3 in the gauge c = (x, rho e^{i phi}, s), <c,c> = 1.
Vec3c i3_polar_vector(double s);
// tr(I1 I3 I2 I3) as a function of the remaining parameter s.
double trace_w(double s);
RepresentationBundle solve_representation(int n);

struct RelationCheck {
    std::string name;
    int order = 0;
    double deviation = 0;          // of M^order from the centre
    double min_proper_deviation = 0;  // smallest deviation of M^d, 0 < d < order
    std::optional<bool> exact_identity;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const;
};

RelationReport verify_relations(const RepresentationBundle& b, double tol = 1e-9);

GroupElement eval_word(const RepresentationBundle& b, const std::string& word);
Mat3q eval_word_exact(const RepresentationBundle& b, const std::string& word);

struct WordSet {
    std::vector<std::string> words;
    int max_length = 0;
    bool contains(const std::string& w) const;
};

WordSet essential_words(const RepresentationBundle& b, int max_len);
// The word set whose spheres bound the Ford domain: S* for n = 4, 6.
WordSet standard_word_set(int n);

}  // namespace chyp
