#include "chyp/reps.hpp"

#include "chyp/words.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace chyp {

namespace {

using Q = GaussRational;

Q gq(int num, int den, int inum = 0, int iden = 1) { return Q(Rational(num, den), Rational(inum, iden)); }

Mat3q i1_exact() {
    Mat3q M = Mat3q::Zero();
    M(0, 0) = Q(-1);
    M(1, 1) = Q(1);
    M(2, 2) = Q(-1);
    return M;
}

Mat3q i2_exact() {
    Mat3q M;
    M << Q(-1), Q(-2), Q(2),
         Q(0), Q(1), Q(-2),
         Q(0), Q(0), Q(-1);
    return M;
}

Mat3q b4_exact() {
    Mat3q M;
    M << gq(1, 2, -1, 1), gq(1, 2, -1, 2), gq(-5, 2, -1, 1),
         gq(-1, 2, 1, 2), gq(-1, 1, 1, 1), gq(3, 2, 1, 2),
         gq(-1, 2), gq(-1, 2, 1, 2), gq(1, 2);
    return M;
}

Mat3c i3_n6() {
    const double s = std::sqrt(23.0);
    Mat3c M;
    M << Cx(-0.5, 0), Cx(5.0 / 12, -s / 12), Cx(1.0 / 3, 0),
         Cx(5.0 / 8, s / 8), Cx(0, 0), Cx(5.0 / 12, s / 12),
         Cx(0.75, 0), Cx(5.0 / 8, -s / 8), Cx(-0.5, 0);
    return M;
}

RepresentationBundle assemble(int n, const Mat3c& I1, const Mat3c& I2, const Mat3c& I3) {
    RepresentationBundle b;
    b.n = n;
    b.I1 = {I1, "I1"};
    b.I2 = {I2, "I2"};
    b.I3 = {I3, "I3"};
    b.A = {I1 * I2, "A"};
    b.B = {I2 * I3, "B"};
    return b;
}

}  // namespace

RepresentationBundle generators(int n) {
    if (n == 4) {
        GeneratorSet<Q> g;
        g.I1 = i1_exact();
        g.I2 = i2_exact();
        g.B = b4_exact();
        g.I3 = g.I2 * g.B;
        g.A = g.I1 * g.I2;
        RepresentationBundle b = assemble(4, to_complex(g.I1), to_complex(g.I2), to_complex(g.I3));
        b.exact = g;
        return b;
    }
    if (n == 6) return assemble(6, to_complex(i1_exact()), to_complex(i2_exact()), i3_n6());
    throw Error(ErrorCode::UnsupportedN, "n = " + std::to_string(n));
}

Vec3c i3_polar_vector(double s) {
    const double rho = 1.0 / std::sqrt(2.0);
    const double x = 0.25 / s;
    const double cphi = (rho * rho + s * s - 0.25) / (2.0 * rho * s);
    if (std::abs(cphi) > 1.0) throw Error(ErrorCode::NoConvergence, "no real angle for this s");
    return Vec3c(Cx(x, 0), std::polar(rho, std::acos(cphi)), Cx(s, 0));
}

double trace_w(double s) {
    const Mat3c I1 = to_complex(i1_exact()), I2 = to_complex(i2_exact());
    const Mat3c I3 = complex_reflection(i3_polar_vector(s));
    return (I1 * I3 * I2 * I3).trace().real();
}

RepresentationBundle solve_representation(int n) {
    if (n != 4 && n != 6) throw Error(ErrorCode::UnsupportedN, "n = " + std::to_string(n));
    const double target = 1.0 + 2.0 * std::cos(2.0 * M_PI / n);
    // s ranges over the values where the angle phi exists.
    std::vector<double> roots;
    const int samples = 4000;
    double prev_s = NAN, prev_v = NAN;
    for (int i = 0; i <= samples; ++i) {
        const double s = 0.05 + 4.0 * i / samples;
        double v;
        try {
            v = trace_w(s) - target;
        } catch (const Error&) {
            prev_s = NAN;
            continue;
        }
        if (!std::isnan(prev_s) && prev_v * v <= 0) {
            std::uintmax_t it = 200;
            auto f = [&](double x) { return trace_w(x) - target; };
            auto r = boost::math::tools::toms748_solve(f, prev_s, s, prev_v, v,
                                                       boost::math::tools::eps_tolerance<double>(52), it);
            roots.push_back(0.5 * (r.first + r.second));
        }
        prev_s = s;
        prev_v = v;
    }
    const Mat3c I1 = to_complex(i1_exact()), I2 = to_complex(i2_exact());
    for (double s : roots) {
        RepresentationBundle b = assemble(n, I1, I2, complex_reflection(i3_polar_vector(s)));
        if (verify_relations(b).all_pass()) return b;
    }
    throw Error(ErrorCode::NoConvergence, "no parameter value satisfies the relations");
}

bool RelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

RelationReport verify_relations(const RepresentationBundle& b, double tol) {
    const Mat3c& A = b.A.matrix;
    const Mat3c& B = b.B.matrix;
    const Mat3c& I1 = b.I1.matrix;
    const Mat3c& I2 = b.I2.matrix;
    const Mat3c& I3 = b.I3.matrix;
    struct Item {
        std::string name;
        Mat3c m;
        int order;
        std::function<Mat3q(const GeneratorSet<Q>&)> exact;
    };
    const int n = b.n;
    std::vector<Item> items = {
        {"I1^2", I1, 2, [](const auto& g) { return g.I1; }},
        {"I2^2", I2, 2, [](const auto& g) { return g.I2; }},
        {"I3^2", I3, 2, [](const auto& g) { return g.I3; }},
        {"B^3", B, 3, [](const auto& g) { return g.B; }},
        {"(AB)^4", A * B, 4, [](const auto& g) { return Mat3q(g.A * g.B); }},
        {"(AB^2)^" + std::to_string(n), A * B * B, n, [](const auto& g) { return Mat3q(g.A * g.B * g.B); }},
        {"(I2I3)^3", I2 * I3, 3, [](const auto& g) { return Mat3q(g.I2 * g.I3); }},
        {"(I3I1)^4", I3 * I1, 4, [](const auto& g) { return Mat3q(g.I3 * g.I1); }},
        {"(I1I3I2I3)^" + std::to_string(n), I1 * I3 * I2 * I3, n,
         [](const auto& g) { return Mat3q(g.I1 * g.I3 * g.I2 * g.I3); }},
    };
    RelationReport rep;
    for (const auto& it : items) {
        RelationCheck c;
        c.name = it.name;
        c.order = it.order;
        c.deviation = identity_deviation(matrix_power(it.m, it.order));
        c.min_proper_deviation = INFINITY;
        for (int d = 1; d < it.order; ++d)
            c.min_proper_deviation = std::min(c.min_proper_deviation, identity_deviation(matrix_power(it.m, d)));
        c.pass = c.deviation < tol && c.min_proper_deviation > 1e3 * tol;
        if (b.exact) {
            const Mat3q e = matrix_power(it.exact(*b.exact), it.order);
            c.exact_identity = e == Mat3q::Identity();
            c.pass = c.pass && *c.exact_identity;
        }
        rep.checks.push_back(c);
    }
    return rep;
}

GroupElement eval_word(const RepresentationBundle& b, const std::string& word) {
    if (!is_group_word(word)) throw Error(ErrorCode::InvalidWord, word);
    const Mat3c a = su21_inverse(b.A.matrix), bi = su21_inverse(b.B.matrix);
    Mat3c M = Mat3c::Identity();
    for (char c : word) {
        switch (c) {
            case 'A': M = M * b.A.matrix; break;
            case 'a': M = M * a; break;
            case 'B': M = M * b.B.matrix; break;
            case 'b': M = M * bi; break;
        }
    }
    return {M, word};
}

Mat3q eval_word_exact(const RepresentationBundle& b, const std::string& word) {
    if (!b.exact) throw Error(ErrorCode::InvalidWord, "no exact generators for n = " + std::to_string(b.n));
    if (!is_group_word(word)) throw Error(ErrorCode::InvalidWord, word);
    const Mat3q a = su21_inverse(b.exact->A), bi = su21_inverse(b.exact->B);
    Mat3q M = Mat3q::Identity();
    for (char c : word) {
        switch (c) {
            case 'A': M = M * b.exact->A; break;
            case 'a': M = M * a; break;
            case 'B': M = M * b.exact->B; break;
            case 'b': M = M * bi; break;
        }
    }
    return M;
}

bool WordSet::contains(const std::string& w) const {
    return std::find(words.begin(), words.end(), w) != words.end();
}

namespace {

// Isometric sphere of g up to A-translation: (centre with Re z in [-1,1), |g31|^2).
struct SphereKeyQ {
    Q z;
    Rational t, g2;
    bool operator==(const SphereKeyQ&) const = default;
};
struct SphereKeyC {
    double x, y, t, g;
    bool near(const SphereKeyC& o) const {
        return std::abs(x - o.x) + std::abs(y - o.y) + std::abs(t - o.t) + std::abs(g - o.g) < 1e-7;
    }
};

std::optional<SphereKeyQ> key_exact(const Mat3q& M) {
    const Q g31 = M(2, 0);
    if (g31 == Q(0)) return std::nullopt;
    HeisPointQ c{conjugate(M(2, 1)) / conjugate(g31), im(conjugate(M(2, 2)) / conjugate(g31)) * 2};
    const int m = static_cast<int>(std::floor((to_double(re(c.z)) + 1.0) / 2.0));
    c = a_power(c, m);
    return SphereKeyQ{c.z, c.t, abs2(g31)};
}

std::optional<SphereKeyC> key_float(const Mat3c& M) {
    const Cx g31 = M(2, 0);
    if (std::abs(g31) < 1e-9) return std::nullopt;
    HeisPoint c{std::conj(M(2, 1)) / std::conj(g31), 2.0 * (std::conj(M(2, 2)) / std::conj(g31)).imag()};
    const int m = static_cast<int>(std::floor((c.z.real() + 1.0 + 1e-9) / 2.0));
    c = a_power(c, m);
    return SphereKeyC{c.z.real(), c.z.imag(), c.t, std::abs(g31)};
}

void extend(std::string& w, int len, std::vector<std::string>& out) {
    if (static_cast<int>(w.size()) == len) {
        if (w.back() == 'B' || w.back() == 'b') out.push_back(w);
        return;
    }
    for (char c : {'A', 'a', 'B', 'b'}) {
        if (w.empty() && (c == 'A' || c == 'a')) continue;
        if (!w.empty()) {
            const char p = w.back();
            if (p == inverse_letter(c)) continue;
            if ((p == 'B' || p == 'b') && (c == 'B' || c == 'b')) continue;
        }
        w.push_back(c);
        extend(w, len, out);
        w.pop_back();
    }
}

}  // namespace

WordSet essential_words(const RepresentationBundle& b, int max_len) {
    WordSet out;
    out.max_length = max_len;
    std::vector<SphereKeyQ> seen_q;
    std::vector<SphereKeyC> seen_c;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> cand;
        std::string w;
        extend(w, len, cand);
        std::vector<SphereKeyQ> new_q;
        std::vector<SphereKeyC> new_c;
        for (const auto& word : cand) {
            bool fresh = true;
            if (b.exact) {
                auto k = key_exact(eval_word_exact(b, word));
                if (!k) continue;
                fresh = std::find(seen_q.begin(), seen_q.end(), *k) == seen_q.end();
                new_q.push_back(*k);
            } else {
                auto k = key_float(eval_word(b, word).matrix);
                if (!k) continue;
                fresh = std::none_of(seen_c.begin(), seen_c.end(), [&](const SphereKeyC& s) { return s.near(*k); });
                new_c.push_back(*k);
            }
            if (fresh) out.words.push_back(word);
        }
        seen_q.insert(seen_q.end(), new_q.begin(), new_q.end());
        seen_c.insert(seen_c.end(), new_c.begin(), new_c.end());
    }
    return out;
}

WordSet standard_word_set(int n) {
    WordSet s;
    s.words = {"b", "B", "BAb", "Bab", "bAb", "BaB", "bab", "BAB", "baB", "bAB"};
    s.max_length = 3;
    if (n == 6) {
        s.words.push_back("BaBaB");
        s.words.push_back("bAbAb");
        s.max_length = 5;
    } else if (n != 4) {
        throw Error(ErrorCode::UnsupportedN, "n = " + std::to_string(n));
    }
    return s;
}

}  // namespace chyp
