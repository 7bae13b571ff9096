#include "chyp/ford.hpp"

#include "chyp/words.hpp"

#include <algorithm>
#include <cmath>

namespace chyp {

namespace {

std::string power_label(const std::string& w, int k) {
    return k == 0 ? w : w + "^" + std::to_string(k);
}

// m with I(base)^m = I(s), when the two spheres are A-translates.
std::optional<int> translate_offset(const IsometricSphere& base, const IsometricSphere& s, const Mat3c& A) {
    const int k = static_cast<int>(std::lround((base.center.z.real() - s.center.z.real()) / 2));
    if (same_sphere(translate_sphere(base, k, A), s)) return k;
    return std::nullopt;
}

}  // namespace

int PartialDomain::index(int family, int k) const {
    if (family < 0 || family >= static_cast<int>(families.size()) || k < kmin || k > kmax) return -1;
    return family * (kmax - kmin + 1) + (k - kmin);
}

std::string PartialDomain::label(int family, int k) const { return power_label(families[family], k); }

std::vector<std::string> PartialDomain::names(int family, int k) const {
    std::vector<std::string> out;
    for (const auto& w : words.words) {
        auto it = aliases.find(w);
        if (it != aliases.end() && it->second.first == family) out.push_back(power_label(w, k - it->second.second));
    }
    return out;
}

std::optional<std::pair<int, int>> PartialDomain::locate(const IsometricSphere& s) const {
    for (int f = 0; f < static_cast<int>(families.size()); ++f) {
        const IsometricSphere& base = spheres[static_cast<std::size_t>(index(f, 0))].sphere;
        if (auto m = translate_offset(base, s, bundle.A.matrix)) return std::make_pair(f, *m);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> PartialDomain::locate(const std::string& word, int k) const {
    return locate(isometric_sphere(bundle, word, k));
}

Mat3c PartialDomain::element(int family, int k) const {
    const int i = index(family, k);
    if (i >= 0) return spheres[static_cast<std::size_t>(i)].sphere.element;
    const Mat3c& A = bundle.A.matrix;
    return matrix_power(A, k) * spheres[static_cast<std::size_t>(index(family, 0))].sphere.element *
           matrix_power(A, -k);
}

GroupElement PartialDomain::pairing(int family, int k) const {
    std::string best;
    int off = 0;
    const auto chosen = pairing_names.find({family, k});
    for (const auto& w : words.words) {
        auto it = aliases.find(w);
        if (it == aliases.end() || it->second.first != family) continue;
        if (chosen != pairing_names.end()) {
            if (w == chosen->second) {
                best = w;
                off = it->second.second;
            }
            continue;
        }
        if (best.empty() || w < best) {
            best = w;
            off = it->second.second;
        }
    }
    const Mat3c& A = bundle.A.matrix;
    const int j = k - off;
    return {matrix_power(A, j) * eval_word(bundle, best).matrix * matrix_power(A, -j), conjugate_by_A(best, j)};
}

PartialDomain build_partial_domain(const RepresentationBundle& b, const WordSet& words, int kmin, int kmax) {
    PartialDomain d;
    d.n = b.n;
    d.bundle = b;
    d.words = words;
    d.kmin = kmin;
    d.kmax = kmax;
    std::vector<IsometricSphere> bases;
    for (const auto& w : words.words) {
        const IsometricSphere s = isometric_sphere(b, w, 0);
        bool found = false;
        for (std::size_t f = 0; f < bases.size() && !found; ++f) {
            if (auto m = translate_offset(bases[f], s, b.A.matrix)) {
                d.aliases[w] = {static_cast<int>(f), *m};
                found = true;
            }
        }
        if (found) continue;
        d.aliases[w] = {static_cast<int>(bases.size()), 0};
        d.families.push_back(w);
        bases.push_back(s);
    }
    for (std::size_t f = 0; f < bases.size(); ++f)
        for (int k = kmin; k <= kmax; ++k)
            d.spheres.push_back({translate_sphere(bases[f], k, b.A.matrix), static_cast<int>(f), k});
    return d;
}

int translate_reach(const PartialDomain& d) {
    int reach = 0;
    const Mat3c& A = d.bundle.A.matrix;
    for (std::size_t f = 0; f < d.families.size(); ++f)
        for (std::size_t g = 0; g < d.families.size(); ++g) {
            const IsometricSphere& a = d.spheres[static_cast<std::size_t>(d.index(static_cast<int>(f), 0))].sphere;
            const IsometricSphere& bs = d.spheres[static_cast<std::size_t>(d.index(static_cast<int>(g), 0))].sphere;
            for (int k = 1; k <= 20; ++k)
                for (int s : {k, -k})
                    if (balls_overlap(a, translate_sphere(bs, s, A))) reach = std::max(reach, k);
        }
    return reach;
}

bool RidgeBoundary::infinite() const {
    return std::any_of(sides.begin(), sides.end(), [](const ArcLabel& l) { return l.at_infinity; });
}

bool RidgeRegion::infinite() const {
    return std::any_of(boundaries.begin(), boundaries.end(), [](const RidgeBoundary& b) { return b.infinite(); });
}

int RidgeRegion::components() const {
    int c = 0;
    for (const auto& b : boundaries) c = std::max(c, b.component + 1);
    return c;
}

std::string polygon_name(int sides) {
    static const char* names[] = {"", "monogon", "bigon", "triangle", "quadrangle", "pentagon", "hexagon",
                                  "heptagon", "octagon", "nonagon", "decagon", "hendecagon", "dodecagon",
                                  "tridecagon", "tetradecagon"};
    if (sides > 0 && sides < 15) return names[sides];
    return std::to_string(sides) + "-gon";
}

std::string RidgeRegion::type() const {
    if (empty()) return "empty";
    std::vector<std::string> comps;
    for (int c = 0; c < components(); ++c) {
        std::vector<std::string> parts;
        for (const auto& b : boundaries)
            if (b.component == c)
                parts.push_back(polygon_name(static_cast<int>(b.sides.size())) + (b.infinite() ? "+inf" : ""));
        std::sort(parts.begin(), parts.end(), [](const std::string& x, const std::string& y) {
            const bool ix = x.find("+inf") != std::string::npos, iy = y.find("+inf") != std::string::npos;
            return ix != iy ? ix : x < y;
        });
        std::string s;
        for (const auto& p : parts) s += (s.empty() ? "" : "&") + p;
        comps.push_back(s);
    }
    std::sort(comps.begin(), comps.end());
    std::string s;
    for (const auto& p : comps) s += (s.empty() ? "" : " ; ") + p;
    return s;
}

int SideReport::infinite_count() const {
    return static_cast<int>(
        std::count_if(entries.begin(), entries.end(), [](const SideEntry& e) { return e.ridge.infinite(); }));
}

std::map<std::string, int> SideReport::type_counts() const {
    std::map<std::string, int> m;
    for (const auto& e : entries) ++m[e.ridge.type()];
    return m;
}

SideReport side_report(const PartialDomain& d, int sphere) {
    SideReport r;
    r.sphere = sphere;
    const IsometricSphere& s = d.spheres[static_cast<std::size_t>(sphere)].sphere;
    for (int j = 0; j < static_cast<int>(d.spheres.size()); ++j) {
        if (j == sphere || !spheres_intersect(s, d.spheres[static_cast<std::size_t>(j)].sphere)) continue;
        r.entries.push_back({j, compute_ridge(d, sphere, j)});
    }
    return r;
}

AxisCheck x_axis_check(const PartialDomain& d, int samples) {
    AxisCheck c;
    const auto left = d.locate("Aba", 0), right = d.locate("B", 0);
    if (!left || !right) return c;
    const IsometricSphere& sl = d.spheres[static_cast<std::size_t>(d.index(left->first, left->second))].sphere;
    const IsometricSphere& sr = d.spheres[static_cast<std::size_t>(d.index(right->first, right->second))].sphere;
    double ml = 1e300, mr = 1e300;
    for (int i = 0; i <= samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        ml = std::min(ml, -sphere_margin(sl, HeisPoint{Cx(-x, 0), 0}));
        mr = std::min(mr, -sphere_margin(sr, HeisPoint{Cx(x, 0), 0}));
    }
    c.margin_left = ml;
    c.margin_right = mr;
    c.pass = ml > 0 && mr > 0;
    return c;
}

}  // namespace chyp
