#include "chyp/ideal_boundary.hpp"

#include "chyp/words.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace chyp {

Heis3 to_heis3(const HeisPoint& p) { return {p.z.real(), p.z.imag(), p.t}; }
HeisPoint from_heis3(const Heis3& p) { return {Cx(p(0), p(1)), p(2)}; }
Heis3 a_translate(const Heis3& p, int m) { return {p(0) - 2 * m, p(1), p(2) + 4 * m * p(1)}; }

double spinal_value(const IsometricSphere& s, const Heis3& p) {
    const double x0 = s.center.z.real(), y0 = s.center.z.imag(), t0 = s.center.t, r = s.radius;
    const double wx = p(0) - x0, wy = p(1) - y0, w2 = wx * wx + wy * wy;
    const double ss = p(2) - t0 + 2 * (p(1) * x0 - p(0) * y0);
    const double r2 = r * r;
    return w2 * w2 + ss * ss - r2 * r2;
}

Heis3 spinal_gradient(const IsometricSphere& s, const Heis3& p) {
    const double x0 = s.center.z.real(), y0 = s.center.z.imag(), t0 = s.center.t;
    const double wx = p(0) - x0, wy = p(1) - y0, w2 = wx * wx + wy * wy;
    const double ss = p(2) - t0 + 2 * (p(1) * x0 - p(0) * y0);
    return {4 * w2 * wx - 4 * ss * y0, 4 * w2 * wy + 4 * ss * x0, 2 * ss};
}

namespace {

double r4(const IsometricSphere& s) { return std::pow(s.radius, 4); }

Heis3 correct(Heis3 x, const IsometricSphere& s1, const IsometricSphere& s2) {
    for (int it = 0; it < 30; ++it) {
        Eigen::Vector2d F(spinal_value(s1, x), spinal_value(s2, x));
        Eigen::Matrix<double, 2, 3> J;
        J.row(0) = spinal_gradient(s1, x).transpose();
        J.row(1) = spinal_gradient(s2, x).transpose();
        const Eigen::Matrix2d JJ = J * J.transpose();
        if (std::abs(JJ.determinant()) < 1e-300) break;
        const Heis3 dx = -J.transpose() * JJ.ldlt().solve(F);
        x += dx;
        if (dx.norm() < 1e-15 * (1 + x.norm())) break;
    }
    return x;
}

Heis3 sphere_point(const IsometricSphere& s, double al, double be) {
    const double r = s.radius;
    const double rho = r * std::sqrt(std::max(std::cos(al), 0.0));
    const Cx z = s.center.z + rho * std::polar(1.0, be);
    const double t = r * r * std::sin(al) + s.center.t - 2 * (z * std::conj(s.center.z)).imag();
    return {z.real(), z.imag(), t};
}

bool on_both(const Heis3& q, const IsometricSphere& s1, const IsometricSphere& s2) {
    return std::abs(spinal_value(s1, q)) < 1e-9 * std::max(1.0, r4(s1)) &&
           std::abs(spinal_value(s2, q)) < 1e-9 * std::max(1.0, r4(s2));
}

std::vector<Heis3> seeds(const IsometricSphere& s1, const IsometricSphere& s2, int na, int nb) {
    const double pi = std::numbers::pi;
    std::vector<std::vector<Heis3>> P(static_cast<std::size_t>(na), std::vector<Heis3>(static_cast<std::size_t>(nb)));
    std::vector<std::vector<double>> V(static_cast<std::size_t>(na), std::vector<double>(static_cast<std::size_t>(nb)));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            const double al = -pi / 2 + pi * i / (na - 1), be = 2 * pi * j / nb;
            P[i][j] = sphere_point(s1, al, be);
            V[i][j] = spinal_value(s2, P[i][j]);
        }
    std::vector<Heis3> raw;
    for (int i = 0; i + 1 < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (V[i][j] * V[i + 1][j] < 0) raw.push_back(0.5 * (P[i][j] + P[i + 1][j]));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            const int jn = (j + 1) % nb;
            if (V[i][j] * V[i][jn] < 0) raw.push_back(0.5 * (P[i][j] + P[i][jn]));
        }
    std::vector<Heis3> out;
    for (const auto& q0 : raw) {
        const Heis3 q = correct(q0, s1, s2);
        if (on_both(q, s1, s2)) out.push_back(q);
    }
    return out;
}

std::vector<Heis3> trace(const IsometricSphere& s1, const IsometricSphere& s2, const Heis3& x0, double h) {
    std::vector<Heis3> pts{x0};
    Heis3 x = x0;
    double L = 0;
    for (int it = 0; it < 200000; ++it) {
        Heis3 T = spinal_gradient(s1, x).cross(spinal_gradient(s2, x));
        T.normalize();
        const Heis3 y = correct(x + h * T, s1, s2);
        L += (y - x).norm();
        x = y;
        if (L > 3 * h && (x - x0).norm() < 0.6 * h) return pts;
        pts.push_back(x);
    }
    throw Error(ErrorCode::NoConvergence, "intersection curve does not close");
}

double min_distance(const std::vector<Heis3>& poly, const Heis3& q) {
    double m = INFINITY;
    for (const auto& p : poly) m = std::min(m, (p - q).norm());
    return m;
}

double segment_distance(const Heis3& p, const Heis3& a, const Heis3& b) {
    const Heis3 ab = b - a;
    const double L2 = ab.squaredNorm();
    const double t = L2 > 0 ? std::clamp((p - a).dot(ab) / L2, 0.0, 1.0) : 0.0;
    return (a + t * ab - p).norm();
}

double polyline_distance(const std::vector<Heis3>& poly, const Heis3& p) {
    double m = INFINITY;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) m = std::min(m, segment_distance(p, poly[i], poly[i + 1]));
    return m;
}

const IsometricSphere& sph(const PartialDomain& d, int i) { return d.spheres[static_cast<std::size_t>(i)].sphere; }

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<std::string> BoundaryComplex::neighbour_labels(int face) const {
    std::vector<std::string> out;
    for (const auto& s : faces[static_cast<std::size_t>(face)].sides) out.push_back(domain->label(s.nb_family, s.nb_k));
    return out;
}

BoundaryComplex ideal_boundary(const PartialDomain& d, const BoundaryOptions& opt) {
    BoundaryComplex bc;
    bc.domain = &d;
    const int F = static_cast<int>(d.families.size());
    const int N = static_cast<int>(d.spheres.size());
    for (int fi = 0; fi < F; ++fi) {
        const int g = d.index(fi, 0);
        const IsometricSphere& s1 = sph(d, g);
        for (int key = 0; key < N; ++key) {
            const int fj = d.spheres[static_cast<std::size_t>(key)].family, k = d.spheres[static_cast<std::size_t>(key)].k;
            if (!(fj > fi || (fj == fi && k > 0))) continue;
            const IsometricSphere& s2 = sph(d, key);
            if (!balls_overlap(s1, s2)) continue;
            const auto sd = seeds(s1, s2, opt.seed_rows, opt.seed_cols);
            if (sd.empty()) continue;
            const double h = opt.step * std::min(s1.radius, s2.radius);
            std::vector<int> others;
            for (int o = 0; o < N; ++o)
                if (o != g && o != key && balls_overlap(sph(d, o), s1) && balls_overlap(sph(d, o), s2)) others.push_back(o);
            std::vector<std::vector<Heis3>> curves;
            for (const auto& q : sd) {
                if (std::any_of(curves.begin(), curves.end(),
                                [&](const auto& c) { return min_distance(c, q) < 3 * h; }))
                    continue;
                curves.push_back(trace(s1, s2, q, h));
            }
            for (const auto& poly : curves) {
                const int m = static_cast<int>(poly.size());
                std::vector<double> mn(static_cast<std::size_t>(m), INFINITY);
                std::vector<int> arg(static_cast<std::size_t>(m), -1);
                for (int i = 0; i < m; ++i)
                    for (int o : others) {
                        const double v = spinal_value(sph(d, o), poly[i]);
                        if (v < mn[i]) {
                            mn[i] = v;
                            arg[i] = o;
                        }
                    }
                std::vector<bool> vis(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) vis[i] = mn[i] > 0;
                if (std::all_of(vis.begin(), vis.end(), [](bool v) { return v; }))
                    throw Error(ErrorCode::NonSurface, "closed visible edge on " + d.label(g) + ", " + d.label(key));
                if (std::none_of(vis.begin(), vis.end(), [](bool v) { return v; })) continue;
                const int st = static_cast<int>(std::find(vis.begin(), vis.end(), false) - vis.begin());
                auto idx = [&](int j) { return (st + j) % m; };
                auto refine = [&](int iin, int iout) {
                    const IsometricSphere& cut = sph(d, arg[iout]);
                    Heis3 a = poly[iin], b = poly[iout];
                    for (int it = 0; it < 60; ++it) {
                        const Heis3 c = correct(0.5 * (a + b), s1, s2);
                        (spinal_value(cut, c) > 0 ? a : b) = c;
                    }
                    return std::make_pair(correct(0.5 * (a + b), s1, s2), arg[iout]);
                };
                for (int j = 0; j < m;) {
                    if (!vis[idx(j)]) {
                        ++j;
                        continue;
                    }
                    const int s = j;
                    while (j < m && vis[idx(j)]) ++j;
                    BoundaryEdge e;
                    e.s1 = g;
                    e.s2 = key;
                    auto [p0, k0] = refine(idx(s), idx(s - 1));
                    auto [p1, k1] = refine(idx(j - 1), idx(j % m));
                    e.cut_a = k0;
                    e.cut_b = k1;
                    e.points.push_back(p0);
                    for (int i = s; i < j; ++i) e.points.push_back(poly[idx(i)]);
                    e.points.push_back(p1);
                    bc.edges.push_back(std::move(e));
                }
            }
        }
    }
    auto vid = [&](const Heis3& p, int& shift) {
        const int m0 = static_cast<int>(std::floor((p(0) + 1) / 2));
        const Heis3 c = a_translate(p, m0);
        for (std::size_t i = 0; i < bc.vertices.size(); ++i)
            for (int m : {-1, 0, 1})
                if ((a_translate(bc.vertices[i], m) - c).norm() < opt.vertex_tol) {
                    shift = m - m0;
                    return static_cast<int>(i);
                }
        bc.vertices.push_back(c);
        shift = -m0;
        return static_cast<int>(bc.vertices.size()) - 1;
    };
    for (auto& e : bc.edges) {
        e.va = vid(e.a(), e.ma);
        e.vb = vid(e.b(), e.mb);
    }

    for (int fi = 0; fi < F; ++fi) {
        struct Inc {
            int edge, shift, other;
            int pa, pb;
        };
        std::vector<Inc> inc;
        std::vector<Heis3> pts;
        auto pid = [&](const Heis3& p) {
            for (std::size_t i = 0; i < pts.size(); ++i)
                if ((pts[i] - p).norm() < opt.vertex_tol) return static_cast<int>(i);
            pts.push_back(p);
            return static_cast<int>(pts.size()) - 1;
        };
        for (int ei = 0; ei < static_cast<int>(bc.edges.size()); ++ei) {
            const auto& e = bc.edges[static_cast<std::size_t>(ei)];
            for (int slot = 0; slot < 2; ++slot) {
                const auto& ds = d.spheres[static_cast<std::size_t>(slot == 0 ? e.s1 : e.s2)];
                if (ds.family != fi) continue;
                const int shift = -ds.k;
                inc.push_back({ei, shift, slot == 0 ? e.s2 : e.s1, pid(a_translate(e.a(), shift)),
                               pid(a_translate(e.b(), shift))});
            }
        }
        std::map<int, std::vector<int>> at;
        for (int j = 0; j < static_cast<int>(inc.size()); ++j) {
            at[inc[j].pa].push_back(j);
            at[inc[j].pb].push_back(j);
        }
        for (const auto& [v, l] : at)
            if (l.size() != 2)
                throw Error(ErrorCode::NonSurface,
                            "vertex of degree " + std::to_string(l.size()) + " on " + d.families[fi]);
        std::vector<bool> used(inc.size(), false);
        int piece = 0;
        for (int j = 0; j < static_cast<int>(inc.size()); ++j) {
            if (used[j]) continue;
            BoundaryFace face;
            face.family = fi;
            face.piece = piece++;
            int cur = j, v = inc[j].pb;
            bool fwd = true;
            while (!used[cur]) {
                used[cur] = true;
                const auto& o = d.spheres[static_cast<std::size_t>(inc[cur].other)];
                face.sides.push_back({inc[cur].edge, inc[cur].shift, fwd, o.family, o.k + inc[cur].shift});
                const auto& l = at[v];
                const int nxt = l[0] == cur ? l[1] : l[0];
                cur = nxt;
                fwd = inc[cur].pa == v;
                v = fwd ? inc[cur].pb : inc[cur].pa;
            }
            bc.faces.push_back(std::move(face));
        }
    }
    return bc;
}

std::pair<int, int> inverse_sphere(const PartialDomain& d, int family, int k) {
    const Mat3c G = d.pairing(family, k).matrix;
    const auto loc = d.locate(isometric_sphere(GroupElement{su21_inverse(G), ""}, 0));
    if (!loc) throw Error(ErrorCode::InvalidWord, "inverse of " + d.label(family, k) + " has no sphere");
    return *loc;
}

std::optional<std::pair<int, int>> find_edge(const BoundaryComplex& bc, const Heis3& p, double tol) {
    const PartialDomain& d = *bc.domain;
    double best = INFINITY;
    std::optional<std::pair<int, int>> out;
    for (int ei = 0; ei < static_cast<int>(bc.edges.size()); ++ei) {
        const auto& e = bc.edges[static_cast<std::size_t>(ei)];
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& q : e.points) {
            lo = std::min(lo, q(0));
            hi = std::max(hi, q(0));
        }
        const int m0 = static_cast<int>(std::ceil((lo - p(0) - 0.1) / 2)), m1 = static_cast<int>(std::floor((hi - p(0) + 0.1) / 2));
        for (int m = m0; m <= m1; ++m) {
            const Heis3 q = a_translate(p, -m);
            const double dist = polyline_distance(e.points, q);
            if (dist > 1e-2 || dist >= best) continue;
            const IsometricSphere& s1 = sph(d, e.s1);
            const IsometricSphere& s2 = sph(d, e.s2);
            if (std::abs(spinal_value(s1, q)) > 1e3 * tol * std::max(1.0, r4(s1)) ||
                std::abs(spinal_value(s2, q)) > 1e3 * tol * std::max(1.0, r4(s2)))
                continue;
            best = dist;
            out = std::make_pair(ei, m);
        }
    }
    return out;
}

EdgeImage map_edge(const BoundaryComplex& bc, int edge, int shift, int family, int k) {
    const PartialDomain& d = *bc.domain;
    const auto& e = bc.edges[static_cast<std::size_t>(edge)];
    const Mat3c G = d.pairing(family, k).matrix;
    auto image = [&](const Heis3& p) { return to_heis3(act(G, from_heis3(a_translate(p, shift)))); };
    const auto hit = find_edge(bc, image(e.mid()));
    if (!hit) throw Error(ErrorCode::OpenCycle, "image of edge " + std::to_string(edge) + " under " + d.label(family, k));
    EdgeImage r;
    r.edge = hit->first;
    r.shift = hit->second;
    const auto& f = bc.edges[static_cast<std::size_t>(r.edge)];
    const Heis3 pa = image(e.a());
    r.forward = (a_translate(f.a(), r.shift) - pa).norm() < (a_translate(f.b(), r.shift) - pa).norm();
    return r;
}

std::vector<int> RidgeCycle::edges() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.edge);
    return out;
}

namespace {

std::string power_word(char c, int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), c); }

// Orientation flags of a cycle: whether step i maps edge i forward onto edge i+1.
struct WalkedCycle {
    RidgeCycle cycle;
    std::vector<bool> forward;
};

WalkedCycle walk_cycle(const BoundaryComplex& bc, int start, int max_steps) {
    const PartialDomain& d = *bc.domain;
    WalkedCycle w;
    auto spheres_of = [&](int edge, int shift) {
        const auto& e = bc.edges[static_cast<std::size_t>(edge)];
        const auto& a = d.spheres[static_cast<std::size_t>(e.s1)];
        const auto& b = d.spheres[static_cast<std::size_t>(e.s2)];
        return std::array<std::pair<int, int>, 2>{std::make_pair(a.family, a.k + shift),
                                                  std::make_pair(b.family, b.k + shift)};
    };
    int edge = start, shift = 0, slot = 0;
    for (int step = 0; step < max_steps; ++step) {
        const auto sp = spheres_of(edge, shift);
        const auto next = sp[1 - slot];
        const EdgeImage im = map_edge(bc, edge, shift, next.first, next.second);
        w.cycle.steps.push_back({edge, shift, next.first, next.second});
        w.forward.push_back(im.forward);
        const auto arrival = inverse_sphere(d, next.first, next.second);
        const auto isp = spheres_of(im.edge, im.shift);
        int nslot;
        if (isp[0] == arrival) nslot = 0;
        else if (isp[1] == arrival) nslot = 1;
        else throw Error(ErrorCode::OpenCycle, "image edge misses " + d.label(arrival.first, arrival.second));
        edge = im.edge;
        shift = im.shift;
        slot = nslot;
        if (edge == start && slot == 0) {
            w.cycle.a_power = shift;
            return w;
        }
    }
    throw Error(ErrorCode::OpenCycle, "cycle of edge " + std::to_string(start) + " does not close");
}

}  // namespace

std::vector<RidgeCycle> ridge_cycles(const BoundaryComplex& bc, int max_steps, double tol) {
    const PartialDomain& d = *bc.domain;
    const Mat3c& A = d.bundle.A.matrix;
    std::vector<RidgeCycle> out;
    std::vector<bool> seen(bc.edges.size(), false);
    for (int e = 0; e < static_cast<int>(bc.edges.size()); ++e) {
        if (seen[e]) continue;
        RidgeCycle c = walk_cycle(bc, e, max_steps).cycle;
        Mat3c T = Mat3c::Identity();
        std::string word;
        for (const auto& s : c.steps) {
            seen[s.edge] = true;
            const GroupElement G = d.pairing(s.family, s.k);
            T = G.matrix * T;
            word = G.word + word;
        }
        T = matrix_power(A, -c.a_power) * T;
        word = (c.a_power > 0 ? power_word('a', c.a_power) : power_word('A', -c.a_power)) + word;
        c.transformation = T;
        c.word = free_reduce(word);
        Mat3c P = Mat3c::Identity();
        for (int j = 1; j <= 24; ++j) {
            P = T * P;
            const double dev = identity_deviation(P);
            if (dev < tol * std::max(1.0, T.cwiseAbs().maxCoeff())) {
                c.order = j;
                c.deviation = dev;
                break;
            }
        }
        if (c.order == 0) throw Error(ErrorCode::OpenCycle, "cycle transformation of infinite order: " + c.word);
        std::string rel;
        for (int j = 0; j < c.order; ++j) rel += c.word;
        c.relation = relation_normal_form(rel);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::vector<std::string> sorted_classes(const std::vector<RidgeCycle>& cycles) {
    std::vector<std::string> out;
    for (const auto& c : cycles) out.push_back(relation_class(c.relation));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

NamingSearch search_pairing_names(const BoundaryComplex& bc, const std::vector<RidgeCycle>& cycles,
                                  const std::vector<std::string>& target) {
    const PartialDomain& d = *bc.domain;
    NamingSearch r;
    r.default_classes = sorted_classes(cycles);
    std::vector<std::string> want;
    for (const auto& t : target) want.push_back(relation_class(t));
    std::sort(want.begin(), want.end());
    std::vector<std::vector<std::string>> options;
    for (const auto& c : cycles)
        for (const auto& s : c.steps) {
            const std::pair<int, int> key{s.family, s.k};
            if (std::find(r.ambiguous.begin(), r.ambiguous.end(), key) != r.ambiguous.end()) continue;
            std::vector<std::string> ws;
            for (const auto& w : d.words.words)
                if (auto it = d.aliases.find(w); it != d.aliases.end() && it->second.first == s.family) ws.push_back(w);
            if (ws.size() < 2) continue;
            std::sort(ws.begin(), ws.end());
            r.ambiguous.push_back(key);
            options.push_back(std::move(ws));
        }
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
        PartialDomain d2 = d;
        for (std::size_t i = 0; i < pick.size(); ++i) d2.pairing_names[r.ambiguous[i]] = options[i][pick[i]];
        BoundaryComplex bc2 = bc;
        bc2.domain = &d2;
        ++r.tried;
        try {
            const auto cyc = ridge_cycles(bc2);
            auto cls = sorted_classes(cyc);
            if (cls == want) {
                r.naming = d2.pairing_names;
                r.classes = std::move(cls);
                return r;
            }
        } catch (const Error&) {
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return r;
}

std::vector<FacePairing> face_pairings(const BoundaryComplex& bc) {
    const PartialDomain& d = *bc.domain;
    std::vector<FacePairing> out;
    for (int fi = 0; fi < static_cast<int>(bc.faces.size()); ++fi) {
        const auto& F = bc.faces[static_cast<std::size_t>(fi)];
        const FaceSide& s = F.sides.front();
        const EdgeImage im = map_edge(bc, s.edge, s.shift, F.family, 0);
        const auto arrival = inverse_sphere(d, F.family, 0);
        int image = -1;
        for (int gj = 0; gj < static_cast<int>(bc.faces.size()) && image < 0; ++gj) {
            const auto& G = bc.faces[static_cast<std::size_t>(gj)];
            if (G.family != arrival.first) continue;
            for (const auto& t : G.sides)
                if (t.edge == im.edge && t.shift == im.shift - arrival.second) image = gj;
        }
        if (image < 0) throw Error(ErrorCode::NonSurface, "face pairing of face " + std::to_string(fi));
        out.push_back({fi, image, F.family});
    }
    return out;
}

std::vector<int> QuotientComplex::class_sizes() const {
    std::vector<int> s(static_cast<std::size_t>(n_edge_classes), 0);
    for (int c : edge_class) ++s[static_cast<std::size_t>(c)];
    return s;
}

QuotientComplex quotient_complex(const BoundaryComplex& bc, const std::vector<RidgeCycle>& cycles) {
    QuotientComplex q;
    const std::size_t E = bc.edges.size();
    q.edge_class.assign(E, -1);
    q.edge_sign.assign(E, 0);
    UnionFind vu(bc.vertices.size());
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
        const WalkedCycle w = walk_cycle(bc, cycles[c].steps.front().edge, static_cast<int>(cycles[c].steps.size()) + 1);
        int sign = 1;
        const std::size_t n = w.cycle.steps.size();
        for (std::size_t i = 0; i < n; ++i) {
            const int e = w.cycle.steps[i].edge;
            if (q.edge_class[e] >= 0 && (q.edge_class[e] != c || q.edge_sign[e] != sign))
                throw Error(ErrorCode::InconsistentOrientation, "edge " + std::to_string(e));
            q.edge_class[e] = c;
            q.edge_sign[e] = sign;
            const int nx = w.cycle.steps[(i + 1) % n].edge;
            const auto& a = bc.edges[static_cast<std::size_t>(e)];
            const auto& b = bc.edges[static_cast<std::size_t>(nx)];
            if (w.forward[i]) {
                vu.join(a.va, b.va);
                vu.join(a.vb, b.vb);
            } else {
                vu.join(a.va, b.vb);
                vu.join(a.vb, b.va);
            }
            sign = w.forward[i] ? sign : -sign;
        }
        if (sign != 1) throw Error(ErrorCode::InconsistentOrientation, "cycle " + std::to_string(c) + " reverses its edge");
    }
    q.n_edge_classes = static_cast<int>(cycles.size());
    std::map<int, int> vnum;
    q.vertex_class.resize(bc.vertices.size());
    for (std::size_t v = 0; v < bc.vertices.size(); ++v) {
        const int r = vu.find(static_cast<int>(v));
        auto it = vnum.find(r);
        if (it == vnum.end()) it = vnum.emplace(r, static_cast<int>(vnum.size())).first;
        q.vertex_class[v] = it->second;
    }
    q.n_vertex_classes = static_cast<int>(vnum.size());
    for (const auto& c : cycles) {
        const auto& e = bc.edges[static_cast<std::size_t>(c.steps.front().edge)];
        q.class_ends.emplace_back(q.vertex_class[e.va], q.vertex_class[e.vb]);
    }
    const auto pairs = face_pairings(bc);
    for (const auto& p : pairs) {
        if (pairs[static_cast<std::size_t>(p.image)].image != p.face)
            throw Error(ErrorCode::NonSurface, "face pairing is not an involution at face " + std::to_string(p.face));
        if (p.face > p.image) continue;
        std::vector<int> word;
        for (const auto& s : bc.faces[static_cast<std::size_t>(p.face)].sides) {
            const int c = q.edge_class[s.edge];
            const int sg = q.edge_sign[s.edge] * (s.forward ? 1 : -1);
            word.push_back(sg * (c + 1));
        }
        q.disks.emplace_back(p.face, p.image);
        q.disk_words.push_back(std::move(word));
    }
    return q;
}

Strip evaluate_strip(const BoundaryComplex& bc, const QuotientComplex& q, const std::vector<int>& offsets) {
    const int Fn = static_cast<int>(bc.faces.size());
    Strip st;
    st.offsets = offsets;
    st.sizes.assign(static_cast<std::size_t>(q.n_edge_classes), 0);
    UnionFind uf(bc.faces.size());
    std::map<std::pair<int, int>, std::pair<int, int>> owner;  // drawn edge -> (face, count)
    for (int f = 0; f < Fn; ++f)
        for (const auto& s : bc.faces[static_cast<std::size_t>(f)].sides) {
            const auto key = std::make_pair(s.edge, s.shift + offsets[static_cast<std::size_t>(f)]);
            auto it = owner.find(key);
            if (it == owner.end()) {
                owner.emplace(key, std::make_pair(f, 1));
                ++st.sizes[static_cast<std::size_t>(q.edge_class[s.edge])];
            } else {
                uf.join(f, it->second.first);
                ++it->second.second;
            }
        }
    st.drawn_edges = static_cast<int>(owner.size());
    for (const auto& [key, v] : owner)
        if (v.second == 1) ++st.boundary_edges;
    st.boundary_edges /= 2;
    st.connected = true;
    for (int f = 0; f < Fn; ++f)
        if (uf.find(f) != uf.find(0)) st.connected = false;
    return st;
}

namespace {

std::vector<int> grow_strip(const BoundaryComplex& bc, std::mt19937* rng) {
    const std::size_t Fn = bc.faces.size();
    std::vector<int> offset(Fn, 0);
    std::vector<bool> placed(Fn, false);
    std::vector<int> queue{0};
    placed[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int f = queue[h];
        auto sides = bc.faces[static_cast<std::size_t>(f)].sides;
        if (rng) std::shuffle(sides.begin(), sides.end(), *rng);
        for (const auto& s : sides)
            for (std::size_t g = 0; g < Fn; ++g) {
                if (placed[g]) continue;
                for (const auto& t : bc.faces[g].sides)
                    if (t.edge == s.edge) {
                        placed[g] = true;
                        offset[g] = s.shift + offset[static_cast<std::size_t>(f)] - t.shift;
                        queue.push_back(static_cast<int>(g));
                        break;
                    }
            }
    }
    return offset;
}

}  // namespace

Strip breadth_first_strip(const BoundaryComplex& bc, const QuotientComplex& q) {
    return evaluate_strip(bc, q, grow_strip(bc, nullptr));
}

StripSearch search_strips(const BoundaryComplex& bc, const QuotientComplex& q, std::vector<int> target, int restarts,
                          unsigned seed) {
    std::sort(target.begin(), target.end());
    std::mt19937 rng(seed);
    StripSearch out;
    out.minimal = breadth_first_strip(bc, q);
    const int Fn = static_cast<int>(bc.faces.size());
    auto consider = [&](const Strip& s) {
        if (!s.connected) return;
        if (s.drawn_edges < out.minimal.drawn_edges) out.minimal = s;
        auto sorted = s.sizes;
        std::sort(sorted.begin(), sorted.end());
        if (!out.realizing && sorted == target) out.realizing = s;
    };
    consider(out.minimal);
    for (int r = 0; r < restarts && Fn > 1; ++r) {
        Strip cur = evaluate_strip(bc, q, grow_strip(bc, &rng));
        consider(cur);
        for (int it = 0; it < 400; ++it) {
            auto o = cur.offsets;
            o[static_cast<std::size_t>(1 + rng() % static_cast<unsigned>(Fn - 1))] += (rng() % 2) ? 1 : -1;
            const Strip next = evaluate_strip(bc, q, o);
            if (!next.connected || next.drawn_edges > cur.drawn_edges) continue;
            cur = next;
            consider(cur);
        }
    }
    return out;
}

namespace {

// Null vectors in an eigenspace mean fixed points on the boundary sphere.
bool has_boundary_fixed_point(const Mat3c& M) {
    Eigen::ComplexEigenSolver<Mat3c> es(M, false);
    const auto ev = es.eigenvalues();
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    std::vector<Cx> seen;
    for (int i = 0; i < 3; ++i) {
        const Cx lam = ev(i);
        if (std::any_of(seen.begin(), seen.end(), [&](const Cx& s) { return std::abs(s - lam) < 1e-6 * scale; }))
            continue;
        seen.push_back(lam);
        Eigen::JacobiSVD<Mat3c> svd(M - lam * Mat3c::Identity(), Eigen::ComputeFullV);
        const auto sv = svd.singularValues();
        int dim = 0;
        for (int j = 0; j < 3; ++j)
            if (sv(j) < 1e-6 * scale) ++dim;
        if (dim == 0) dim = 1;
        const auto V = svd.matrixV().rightCols(dim);
        Eigen::MatrixXcd G(dim, dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) G(a, b) = hermitian_form<Cx>(V.col(a), V.col(b));
        if (dim == 1 && std::abs(G(0, 0).real()) < 1e-8) return true;
        if (dim == 2 && G.determinant().real() < 1e-8) return true;
        if (dim == 3) return true;
    }
    return false;
}

}  // namespace

bool ParabolicReport::clean() const {
    return std::none_of(entries.begin(), entries.end(), [](const Entry& e) { return e.boundary_parabolic; });
}

ParabolicReport check_no_boundary_parabolics(const BoundaryComplex& bc, const std::vector<RidgeCycle>& cycles) {
    const PartialDomain& d = *bc.domain;
    ParabolicReport rep;
    auto add = [&](const std::string& what, const Mat3c& M) {
        if (identity_deviation(M) < 1e-9 * std::max(1.0, M.cwiseAbs().maxCoeff())) return;
        const IsometryClass c = classify_isometry(M, 1e-9);
        const bool parabolic = std::holds_alternative<Parabolic>(c);
        const bool fixed = std::holds_alternative<Elliptic>(c) && has_boundary_fixed_point(M);
        rep.entries.push_back({what, std::string(to_string(c)) + (fixed ? " with boundary fixed points" : ""),
                               parabolic || fixed});
    };
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        Mat3c P = Mat3c::Identity();
        for (int j = 1; j < cycles[i].order; ++j) {
            P = cycles[i].transformation * P;
            add("cycle " + std::to_string(i + 1) + " power " + std::to_string(j), P);
        }
    }
    // Stabilizers of the vertices: loops of the orbit graph under the side pairings.
    const int V = static_cast<int>(bc.vertices.size());
    std::vector<std::optional<Mat3c>> g(static_cast<std::size_t>(V));
    auto vertex_of = [&](const Heis3& p, int& shift) {
        const int m0 = static_cast<int>(std::floor((p(0) + 1) / 2));
        const Heis3 c = a_translate(p, m0);
        for (int i = 0; i < V; ++i)
            for (int m : {-1, 0, 1})
                if ((a_translate(bc.vertices[static_cast<std::size_t>(i)], m) - c).norm() < 1e-4) {
                    shift = m - m0;
                    return i;
                }
        return -1;
    };
    const Mat3c& A = d.bundle.A.matrix;
    for (int root = 0; root < V; ++root) {
        if (g[root]) continue;
        g[root] = Mat3c::Identity();
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            const Heis3 p = bc.vertices[static_cast<std::size_t>(v)];
            for (std::size_t s = 0; s < d.spheres.size(); ++s) {
                const IsometricSphere& S = d.spheres[s].sphere;
                if (std::abs(spinal_value(S, p)) > 1e-6 * std::max(1.0, r4(S))) continue;
                const Mat3c G = S.element;
                int shift = 0;
                const int w = vertex_of(to_heis3(act(G, from_heis3(p))), shift);
                if (w < 0) continue;
                const Mat3c to_w = matrix_power(A, -shift) * G * *g[v];
                if (!g[w]) {
                    g[w] = to_w;
                    queue.push_back(w);
                } else {
                    add("stabilizer of vertex " + std::to_string(root) + " via " + d.label(static_cast<int>(s)),
                        su21_inverse(*g[w]) * to_w);
                }
            }
        }
    }
    return rep;
}

AdjacencyMatch match_adjacency(const BoundaryComplex& bc, const std::vector<AdjacencyRow>& rows) {
    const PartialDomain& d = *bc.domain;
    AdjacencyMatch m;
    m.face_of_row.assign(rows.size(), -1);
    auto cyclic_equal = [](std::vector<std::pair<int, int>> a, const std::vector<std::pair<int, int>>& b) {
        if (a.size() != b.size()) return false;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t r = 0; r < a.size(); ++r) {
                std::rotate(a.begin(), a.begin() + 1, a.end());
                if (a == b) return true;
            }
            std::reverse(a.begin(), a.end());
        }
        return false;
    };
    std::vector<bool> face_hit(bc.faces.size(), false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto at = d.locate(rows[r].face, 0);
        if (!at) continue;
        std::vector<std::pair<int, int>> want;
        bool ok = true;
        for (const auto& w : rows[r].neighbours) {
            const auto loc = d.locate(w, 0);
            if (!loc) {
                ok = false;
                break;
            }
            want.emplace_back(loc->first, loc->second - at->second);
        }
        if (!ok) continue;
        for (std::size_t f = 0; f < bc.faces.size(); ++f) {
            if (bc.faces[f].family != at->first) continue;
            std::vector<std::pair<int, int>> have;
            for (const auto& s : bc.faces[f].sides) have.emplace_back(s.nb_family, s.nb_k);
            if (cyclic_equal(have, want)) {
                m.face_of_row[r] = static_cast<int>(f);
                face_hit[f] = true;
                break;
            }
        }
    }
    m.all_rows = std::none_of(m.face_of_row.begin(), m.face_of_row.end(), [](int f) { return f < 0; });
    m.all_faces = std::all_of(face_hit.begin(), face_hit.end(), [](bool b) { return b; });
    return m;
}

}  // namespace chyp
