// Ridge regions as arrangements of torus curves on a Giraud disk.
#include "chyp/ford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace chyp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * kPi;
constexpr double kMemberTol = 1e-9;
constexpr double kMergeTol = 1e-4;

double wrap_signed(double x) { return x - kTwoPi * std::round(x / kTwoPi); }

Eigen::Vector2d delta(const TorusPoint& a, const TorusPoint& b) {
    return {wrap_signed(b.t1 - a.t1), wrap_signed(b.t2 - a.t2)};
}

TorusPoint advance(const TorusPoint& from, const TorusPoint& to) {
    const Eigen::Vector2d d = delta(from, to);
    return {from.t1 + d(0), from.t2 + d(1)};
}

bool in_region(const std::vector<TorusForm>& forms, const TorusPoint& p, int skip_a, int skip_b = -1) {
    for (int k = 0; k < static_cast<int>(forms.size()); ++k) {
        if (k == skip_a || k == skip_b) continue;
        if (forms[k](p) > kMemberTol * forms[k].scale()) return false;
    }
    return true;
}

TorusPoint project(const TorusForm& f, TorusPoint p) {
    for (int i = 0; i < 8; ++i) {
        const Eigen::Vector2d g = f.gradient(p.t1, p.t2);
        const double n2 = g.squaredNorm();
        if (n2 < 1e-24) break;
        const double v = f(p);
        p.t1 -= v * g(0) / n2;
        p.t2 -= v * g(1) / n2;
        if (std::abs(v) < 1e-15 * f.scale()) break;
    }
    return p;
}

struct Vertex {
    TorusPoint p;
    std::vector<int> forms;
    std::vector<int> nodes;  // forms with a node here
};

struct Hit {
    double s = 0;
    int vertex = -1;
};

struct ElementaryArc {
    int form = -1;
    std::vector<TorusPoint> pts;
    int from = -1, to = -1;
    bool used = false;
};

// Positions of p along a polyline, as segment index plus fraction; one per
// passage of the path through p.
std::vector<double> locate_on_loop(const std::vector<TorusPoint>& loop, bool closed, const TorusPoint& p, double tol) {
    const std::size_t n = loop.size();
    const std::size_t segs = closed ? n : n - 1;
    std::vector<std::pair<double, double>> near;  // (dist, position)
    for (std::size_t j = 0; j < segs; ++j) {
        const TorusPoint& a = loop[j];
        const Eigen::Vector2d ab = delta(a, loop[(j + 1) % n]);
        const Eigen::Vector2d ap = delta(a, p);
        const double l2 = ab.squaredNorm();
        const double u = l2 > 0 ? std::clamp(ap.dot(ab) / l2, 0.0, 1.0) : 0.0;
        const double dist = (ap - u * ab).norm();
        near.push_back({dist, static_cast<double>(j) + u});
    }
    std::vector<double> out;
    for (std::size_t j = 0; j < segs; ++j) {
        const double dj = near[j].first;
        if (dj >= tol) continue;
        const double prev = closed || j > 0 ? near[(j + segs - 1) % segs].first : 1e300;
        const double next = closed || j + 1 < segs ? near[(j + 1) % segs].first : 1e300;
        if (dj < prev && dj <= next) out.push_back(std::fmod(near[j].second, static_cast<double>(n)));
    }
    return out;
}

std::vector<TorusPoint> loop_piece(const std::vector<TorusPoint>& loop, double s0, double s1, const TorusPoint& p0,
                                   const TorusPoint& p1) {
    const std::size_t n = loop.size();
    std::vector<TorusPoint> out{p0};
    for (long j = static_cast<long>(std::floor(s0)) + 1; static_cast<double>(j) < s1; ++j)
        out.push_back(advance(out.back(), loop[static_cast<std::size_t>(j) % n]));
    out.push_back(advance(out.back(), p1));
    return out;
}

double polyline_length(const std::vector<TorusPoint>& pts) {
    double l = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) l += delta(pts[i - 1], pts[i]).norm();
    return l;
}

struct ArcMid {
    TorusPoint p;
    Eigen::Vector2d tangent;
};

ArcMid arc_mid(const std::vector<TorusPoint>& pts) {
    const double half = polyline_length(pts) / 2;
    double l = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Eigen::Vector2d d = delta(pts[i - 1], pts[i]);
        const double s = d.norm();
        if (l + s >= half && s > 0) {
            const double u = (half - l) / s;
            return {{pts[i - 1].t1 + u * d(0), pts[i - 1].t2 + u * d(1)}, d};
        }
        l += s;
    }
    return {pts[pts.size() / 2], delta(pts.front(), pts.back())};
}

TorusPoint midpoint_of(const std::vector<TorusPoint>& pts) { return arc_mid(pts).p; }

// Direction leaving the first point of a polyline.
Eigen::Vector2d start_direction(const std::vector<TorusPoint>& pts) {
    const double reach = std::min(1e-3, polyline_length(pts) / 4);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Eigen::Vector2d d = delta(pts.front(), pts[i]);
        if (d.norm() >= reach) return d.normalized();
    }
    return delta(pts.front(), pts.back()).normalized();
}

Eigen::Vector2d end_direction(const std::vector<TorusPoint>& pts) {
    std::vector<TorusPoint> r(pts.rbegin(), pts.rend());
    return -start_direction(r);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

RidgeRegion compute_ridge(const PartialDomain& d, int s1, int s2) {
    RidgeRegion r;
    r.s1 = s1;
    r.s2 = s2;
    const IsometricSphere& a = d.spheres[static_cast<std::size_t>(s1)].sphere;
    const IsometricSphere& b = d.spheres[static_cast<std::size_t>(s2)].sphere;
    r.chart = make_giraud(a, b);
    const TorusForm nf = norm_form(r.chart);
    if (minimize_form(nf).value >= 0) return r;
    r.constraints.push_back(nf);
    r.constraint_labels.push_back({true, -1, 0});

    for (int i = 0; i < static_cast<int>(d.spheres.size()); ++i) {
        if (i == s1 || i == s2) continue;
        const DomainSphere& ds = d.spheres[static_cast<std::size_t>(i)];
        if (!balls_overlap(ds.sphere, a) || !balls_overlap(ds.sphere, b)) continue;
        const DiskTest t = disk_inside_sphere(r.chart, ds.sphere);
        if (t.tangency) r.tangency = true;
        if (t.position == DiskPosition::Inside) {
            r.constraints.clear();
            r.constraint_labels.clear();
            return r;
        }
        if (t.position == DiskPosition::Outside) continue;
        r.constraints.push_back(sphere_form(r.chart, ds.sphere));
        r.constraint_labels.push_back({false, ds.family, ds.k});
    }

    const int nc = static_cast<int>(r.constraints.size());
    std::vector<TraceCurve> curves;
    for (const auto& f : r.constraints) curves.push_back(trace_curve(f, 512));

    std::vector<Vertex> vertices;
    auto add_vertex = [&](const TorusPoint& p, std::initializer_list<int> forms, bool node = false) {
        auto it = std::find_if(vertices.begin(), vertices.end(),
                               [&](const Vertex& v) { return torus_distance(v.p, p) < kMergeTol; });
        if (it == vertices.end()) {
            vertices.push_back({p, forms, {}});
            it = vertices.end() - 1;
        }
        if (node) it->nodes.insert(it->nodes.end(), forms.begin(), forms.end());
        for (int k : forms)
            if (std::find(it->forms.begin(), it->forms.end(), k) == it->forms.end()) it->forms.push_back(k);
    };
    // Nodes first, so that nearby numerical crossings merge onto the exact node.
    // Crossings at nodes and tangencies are double roots, accurate only to about 1e-5.
    for (int i = 1; i < nc; ++i)
        for (const TorusPoint& p : singular_points(r.constraints[i]))
            if (in_region(r.constraints, p, i)) add_vertex(p, {i}, true);
    for (int i = 1; i < nc; ++i) {
        const TraceCurve& tc = curves[static_cast<std::size_t>(i)];
        for (std::size_t l = 0; l < tc.loops.size(); ++l)
            if (!tc.closed[l])
                for (const TorusPoint& p : {tc.loops[l].front(), tc.loops[l].back()})
                    if (in_region(r.constraints, p, i)) add_vertex(p, {i}, true);
    }
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j)
            for (const TorusPoint& p : form_intersections(r.constraints[i], r.constraints[j]))
                if (in_region(r.constraints, p, i, j)) add_vertex(p, {i, j});

    std::vector<ElementaryArc> arcs;
    for (int i = 0; i < nc; ++i) {
        const auto& loops = curves[static_cast<std::size_t>(i)].loops;
        const auto& closed = curves[static_cast<std::size_t>(i)].closed;
        std::vector<std::vector<Hit>> hits(loops.size());
        for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
            const Vertex& vx = vertices[static_cast<std::size_t>(v)];
            if (std::find(vx.forms.begin(), vx.forms.end(), i) == vx.forms.end()) continue;
            for (std::size_t l = 0; l < loops.size(); ++l) {
                for (double s : locate_on_loop(loops[l], closed[l], vx.p, 1e-3)) hits[l].push_back({s, v});
            }
        }
        for (std::size_t l = 0; l < loops.size(); ++l) {
            const auto& loop = loops[l];
            const double n = static_cast<double>(loop.size());
            auto& h = hits[l];
            std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.s < y.s; });
            h.erase(std::unique(h.begin(), h.end(),
                                [](const Hit& x, const Hit& y) { return x.vertex == y.vertex && y.s - x.s < 1e-6; }),
                    h.end());
            if (h.empty() && !closed[l]) continue;
            if (h.empty()) {
                std::vector<TorusPoint> pts;
                for (const auto& p : loop) pts.push_back(pts.empty() ? p : advance(pts.back(), p));
                pts.push_back(advance(pts.back(), loop.front()));
                if (in_region(r.constraints, project(r.constraints[i], midpoint_of(pts)), i))
                    arcs.push_back({i, std::move(pts), -1, -1});
                continue;
            }
            for (std::size_t k = 0; k < h.size(); ++k) {
                if (!closed[l] && k + 1 == h.size()) break;
                const Hit& x = h[k];
                const Hit& y = h[(k + 1) % h.size()];
                const double s1v = x.s, s2v = k + 1 < h.size() ? y.s : y.s + n;
                if (s2v - s1v < 1e-9) continue;
                auto pts = loop_piece(loop, s1v, s2v, vertices[static_cast<std::size_t>(x.vertex)].p,
                                      vertices[static_cast<std::size_t>(y.vertex)].p);
                if (x.vertex == y.vertex && polyline_length(pts) < kMergeTol) continue;
                const TorusPoint mid = project(r.constraints[i], midpoint_of(pts));
                if (in_region(r.constraints, mid, i)) arcs.push_back({i, std::move(pts), x.vertex, y.vertex});
            }
        }
    }

    // Orient every arc with the region on its left.
    for (auto& arc : arcs) {
        const TorusForm& f = r.constraints[arc.form];
        const ArcMid m = arc_mid(arc.pts);
        const Eigen::Vector2d g = f.gradient(m.p.t1, m.p.t2);
        const Eigen::Vector2d want(-g(1), g(0));
        const Eigen::Vector2d& tangent = m.tangent;
        if (tangent.dot(want) < 0) {
            std::reverse(arc.pts.begin(), arc.pts.end());
            std::swap(arc.from, arc.to);
        }
    }

    std::vector<std::vector<int>> cycles;
    for (std::size_t start = 0; start < arcs.size(); ++start) {
        if (arcs[start].used) continue;
        std::vector<int> cyc;
        int cur = static_cast<int>(start);
        for (std::size_t guard = 0; guard <= arcs.size(); ++guard) {
            arcs[static_cast<std::size_t>(cur)].used = true;
            cyc.push_back(cur);
            const ElementaryArc& ca = arcs[static_cast<std::size_t>(cur)];
            if (ca.to < 0) break;
            const Eigen::Vector2d back = -end_direction(ca.pts);
            const double ab = std::atan2(back(1), back(0));
            int next = -1;
            double best = 1e300;
            for (std::size_t j = 0; j < arcs.size(); ++j) {
                if (arcs[j].from != ca.to) continue;
                const Eigen::Vector2d o = start_direction(arcs[j].pts);
                double cw = wrap_angle(ab - std::atan2(o(1), o(0)));
                if (cw < 1e-9) cw = kTwoPi;
                if (cw < best) {
                    best = cw;
                    next = static_cast<int>(j);
                }
            }
            if (next < 0) throw Error(ErrorCode::OpenCycle, "ridge " + d.label(s1) + " / " + d.label(s2));
            if (next == static_cast<int>(start)) break;
            if (arcs[static_cast<std::size_t>(next)].used) throw Error(ErrorCode::OpenCycle, "ridge traversal");
            cur = next;
        }
        cycles.push_back(std::move(cyc));
    }

    UnionFind uf(static_cast<int>(cycles.size()));
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            for (int x : cycles[i])
                for (int y : cycles[j])
                    if (arcs[static_cast<std::size_t>(x)].from >= 0 &&
                        arcs[static_cast<std::size_t>(x)].from == arcs[static_cast<std::size_t>(y)].from)
                        uf.unite(static_cast<int>(i), static_cast<int>(j));
    std::map<int, int> comp;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        RidgeBoundary bd;
        for (int x : cycles[i]) {
            const ElementaryArc& ea = arcs[static_cast<std::size_t>(x)];
            bd.arcs.push_back({r.constraint_labels[static_cast<std::size_t>(ea.form)], ea.pts});
        }
        // Consecutive arcs of one sphere form one side unless they meet at a node.
        auto breaks = [&](int x) {
            const ElementaryArc& ea = arcs[static_cast<std::size_t>(x)];
            if (ea.from < 0) return false;
            const auto& nodes = vertices[static_cast<std::size_t>(ea.from)].nodes;
            return std::find(nodes.begin(), nodes.end(), ea.form) != nodes.end();
        };
        const auto& cyc = cycles[i];
        const std::size_t m = cyc.size();
        std::size_t first = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const int prev = arcs[static_cast<std::size_t>(cyc[(k + m - 1) % m])].form;
            const int cur = arcs[static_cast<std::size_t>(cyc[k])].form;
            if (prev != cur || breaks(cyc[k])) {
                first = k;
                break;
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            const int x = cyc[(first + k) % m];
            const int prev = arcs[static_cast<std::size_t>(cyc[(first + k + m - 1) % m])].form;
            const int form = arcs[static_cast<std::size_t>(x)].form;
            if (k == 0 || prev != form || breaks(x)) bd.sides.push_back(r.constraint_labels[static_cast<std::size_t>(form)]);
        }
        const int root = uf.find(static_cast<int>(i));
        if (!comp.count(root)) {
            const int c = static_cast<int>(comp.size());
            comp[root] = c;
        }
        bd.component = comp[root];
        r.boundaries.push_back(std::move(bd));
    }
    return r;
}

DiskTest region_inside_sphere(const PartialDomain& d, const RidgeRegion& r, const IsometricSphere& s) {
    (void)d;
    DiskTest t;
    if (r.empty()) return t;
    const TorusForm f = sphere_form(r.chart, s);
    const double sc = f.scale();
    bool pos = false, neg = false;
    double closest = 1e300;
    for (const auto& bd : r.boundaries)
        for (const auto& arc : bd.arcs)
            for (const auto& p : arc.points) {
                const double v = f(p) / sc;
                closest = std::min(closest, std::abs(v));
                if (v > 1e-9) pos = true;
                if (v < -1e-9) neg = true;
            }
    if (pos && neg) {
        t.position = DiskPosition::Crossing;
        return t;
    }
    for (const auto& loop : trace_curve(f).loops)
        for (const auto& p : loop)
            if (in_region(r.constraints, p, -1)) {
                t.position = DiskPosition::Crossing;
                return t;
            }
    t.tangency = closest < 1e-7;
    t.position = pos ? DiskPosition::Inside : DiskPosition::Outside;
    return t;
}

}  // namespace chyp
