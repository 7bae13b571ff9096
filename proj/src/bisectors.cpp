#include "chyp/bisectors.hpp"

#include <boost/math/tools/minima.hpp>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chyp {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Laurent polynomial in z1 with exponents lo .. lo + c.size() - 1.
struct Laurent {
    int lo = 0;
    std::vector<Cx> c;

    static Laurent term(int e, Cx v) { return {e, {v}}; }
    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    Cx at(int e) const { return e < lo || e > hi() ? Cx(0) : c[e - lo]; }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.c.empty()) return b;
        if (b.c.empty()) return a;
        Laurent r;
        r.lo = std::min(a.lo, b.lo);
        const int h = std::max(a.hi(), b.hi());
        for (int e = r.lo; e <= h; ++e) r.c.push_back(a.at(e) + b.at(e));
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent nb = b;
        for (auto& x : nb.c) x = -x;
        return a + nb;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        if (a.c.empty() || b.c.empty()) return r;
        r.lo = a.lo + b.lo;
        r.c.assign(a.c.size() + b.c.size() - 1, Cx(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
};

// Roots of a Laurent polynomial, lying near the unit circle, as angles.
std::vector<double> unit_circle_roots(const Laurent& p, double tol) {
    std::vector<Cx> c = p.c;
    double mx = 0;
    for (const auto& x : c) mx = std::max(mx, std::abs(x));
    if (mx == 0) return {};
    while (!c.empty() && std::abs(c.back()) < 1e-13 * mx) c.pop_back();
    std::size_t skip = 0;
    while (skip < c.size() && std::abs(c[skip]) < 1e-13 * mx) ++skip;
    c.erase(c.begin(), c.begin() + static_cast<long>(skip));
    if (c.size() < 2) return {};
    Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) coeffs(static_cast<Eigen::Index>(i)) = c[i];
    Eigen::PolynomialSolver<Cx, Eigen::Dynamic> solver(coeffs);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
        const Cx z = solver.roots()(i);
        if (std::abs(std::abs(z) - 1) < tol) out.push_back(wrap_angle(std::arg(z)));
    }
    return out;
}

struct FormLaurent {
    Laurent K, M, Mbar;
};

FormLaurent form_laurent(const TorusForm& f) {
    const Mat3c& H = f.H;
    FormLaurent r;
    const double c0 = (H(0, 0) + H(1, 1) + H(2, 2)).real();
    r.K = Laurent{-1, {std::conj(H(1, 0)), Cx(c0), H(1, 0)}};
    r.M = Laurent{-1, {H(2, 1), H(2, 0)}};
    r.Mbar = Laurent{0, {std::conj(H(2, 0)), std::conj(H(2, 1))}};
    return r;
}

double turning_function(const TorusForm& f, double t1) {
    const double k = f.K(t1);
    return k * k - 4 * std::norm(f.M(t1));
}

double polish_turning(const TorusForm& f, double t) {
    // Secant refinement of a zero of K^2 - 4|M|^2.
    double a = t - 1e-6, b = t + 1e-6;
    double fa = turning_function(f, a), fb = turning_function(f, b);
    for (int i = 0; i < 40 && fb != fa; ++i) {
        const double c = b - fb * (b - a) / (fb - fa);
        a = b;
        fa = fb;
        b = c;
        fb = turning_function(f, b);
        if (std::abs(b - a) < 1e-15) break;
    }
    return std::abs(b - t) < 1e-3 ? wrap_angle(b) : wrap_angle(t);
}

double branch_t2(const TorusForm& f, double t1, int sign) {
    const Cx m = f.M(t1);
    const double am = std::abs(m);
    double c = am > 0 ? -f.K(t1) / (2 * am) : 0;
    c = std::clamp(c, -1.0, 1.0);
    return -std::arg(m) + sign * std::acos(c);
}

void unwrap(std::vector<TorusPoint>& loop) {
    for (std::size_t i = 1; i < loop.size(); ++i) {
        double d = loop[i].t2 - loop[i - 1].t2;
        loop[i].t2 -= kTwoPi * std::round(d / kTwoPi);
    }
}

bool polish_pair(const TorusForm& f, const TorusForm& g, TorusPoint& p) {
    const double sf = f.scale(), sg = g.scale();
    for (int it = 0; it < 60; ++it) {
        const double a = f(p) / sf, b = g(p) / sg;
        if (std::abs(a) < 1e-14 && std::abs(b) < 1e-14) return true;
        const Eigen::Vector2d ga = f.gradient(p.t1, p.t2) / sf, gb = g.gradient(p.t1, p.t2) / sg;
        Eigen::Matrix2d J;
        J << ga(0), ga(1), gb(0), gb(1);
        const double det = J.determinant();
        if (std::abs(det) < 1e-16) return false;
        const Eigen::Vector2d d = J.inverse() * Eigen::Vector2d(a, b);
        p.t1 -= d(0);
        p.t2 -= d(1);
        if (d.norm() < 1e-15) break;
    }
    return std::abs(f(p)) / sf < 1e-12 && std::abs(g(p)) / sg < 1e-12;
}

std::vector<double> turning_points(const TorusForm& f) {
    const FormLaurent L = form_laurent(f);
    const Laurent g = L.K * L.K - Laurent::term(0, Cx(4)) * L.M * L.Mbar;
    std::vector<double> turns;
    for (double t : unit_circle_roots(g, 1e-5)) turns.push_back(polish_turning(f, t));
    std::sort(turns.begin(), turns.end());
    // A node of the curve is a double root; its two numerical copies merge.
    turns.erase(std::unique(turns.begin(), turns.end(), [](double a, double b) { return std::abs(a - b) < 1e-7; }),
                turns.end());
    if (turns.size() > 1 && turns.back() - turns.front() > kTwoPi - 1e-7) turns.pop_back();
    return turns;
}

// K and M both vanish: the whole circle {t1} lies on the curve.
bool vertical_line(const TorusForm& f, double t1) {
    const double tol = 1e-9 * f.scale();
    return std::abs(f.K(t1)) < tol && std::abs(f.M(t1)) < tol;
}

}  // namespace

double wrap_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;
    return r;
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
    auto d = [](double x, double y) {
        double e = std::abs(wrap_angle(x) - wrap_angle(y));
        return std::min(e, kTwoPi - e);
    };
    return std::hypot(d(a.t1, b.t1), d(a.t2, b.t2));
}

IsometricSphere isometric_sphere(const GroupElement& g, int k) {
    const Mat3c& M = g.matrix;
    const Cx g31 = M(2, 0), g32 = M(2, 1), g33 = M(2, 2);
    if (std::abs(g31) < 1e-12) throw Error(ErrorCode::FixesInfinity, g.word);
    IsometricSphere s;
    s.word = g.word;
    s.k = k;
    s.center = {std::conj(g32) / std::conj(g31), 2 * (std::conj(g33) / std::conj(g31)).imag()};
    s.radius = std::sqrt(2 / std::abs(g31));
    s.element = M;
    s.lift = su21_inverse(M) * q_infinity<Cx>();
    return s;
}

IsometricSphere isometric_sphere(const RepresentationBundle& b, const std::string& word, int k) {
    const Mat3c M = matrix_power(b.A.matrix, k) * eval_word(b, word).matrix * matrix_power(b.A.matrix, -k);
    return isometric_sphere(GroupElement{M, word}, k);
}

IsometricSphere translate_sphere(const IsometricSphere& s, int k, const Mat3c& A) {
    IsometricSphere t = s;
    const Mat3c Ak = matrix_power(A, k);
    t.k = s.k + k;
    t.center = a_power(s.center, k);
    t.element = Ak * s.element * matrix_power(A, -k);
    t.lift = Ak * s.lift;
    return t;
}

ExactSphere exact_isometric_sphere(const Mat3q& g) {
    const GaussRational g31 = g(2, 0), g32 = g(2, 1), g33 = g(2, 2);
    if (g31 == GaussRational(0)) throw Error(ErrorCode::FixesInfinity, "exact element");
    ExactSphere s;
    s.center.z = conjugate(g32) / conjugate(g31);
    s.center.t = im(conjugate(g33) / conjugate(g31)) * 2;
    s.radius4 = Rational(4) / abs2(g31);
    return s;
}

bool same_sphere(const IsometricSphere& a, const IsometricSphere& b, double tol) {
    return std::abs(a.center.z - b.center.z) < tol && std::abs(a.center.t - b.center.t) < tol &&
           std::abs(a.radius - b.radius) < tol;
}

double sphere_margin(const IsometricSphere& s, const HeisPoint& p) { return cygan_distance(p, s.center) - s.radius; }

bool balls_overlap(const IsometricSphere& a, const IsometricSphere& b, double slack) {
    return cygan_distance(a.center, b.center) < a.radius + b.radius - slack;
}

GiraudChart make_giraud(const Vec3c& q, const Vec3c& r) {
    GiraudChart c;
    c.p = q_infinity<Cx>();
    c.q = q;
    c.r = r;
    Mat3c P;
    P << c.p, c.q, c.r;
    const double scale = c.q.norm() * c.r.norm();
    if (std::abs(P.determinant()) < 1e-12 * scale) throw Error(ErrorCode::DegenerateTriple, "lifts on one complex line");
    c.v0 = box_product(c.q, c.r);
    c.v1 = box_product(c.r, c.p);
    c.v2 = box_product(c.p, c.q);
    return c;
}

GiraudChart make_giraud(const GroupElement& g1, const GroupElement& g2) {
    return make_giraud(Vec3c(g1.matrix * q_infinity<Cx>()), Vec3c(g2.matrix * q_infinity<Cx>()));
}

GiraudChart make_giraud(const IsometricSphere& s1, const IsometricSphere& s2) { return make_giraud(s1.lift, s2.lift); }

double TorusForm::operator()(double t1, double t2) const {
    return K(t1) + 2 * (M(t1) * std::polar(1.0, t2)).real();
}

double TorusForm::K(double t1) const {
    return (H(0, 0) + H(1, 1) + H(2, 2)).real() + 2 * (H(1, 0) * std::polar(1.0, t1)).real();
}

Cx TorusForm::M(double t1) const { return H(2, 0) + H(2, 1) * std::polar(1.0, -t1); }

Eigen::Vector2d TorusForm::gradient(double t1, double t2) const {
    const Cx z1 = std::polar(1.0, t1), z2 = std::polar(1.0, t2);
    const Cx I(0, 1);
    const double dk = 2 * (H(1, 0) * I * z1).real();
    const Cx dm = H(2, 1) * (-I) * std::conj(z1);
    return {dk + 2 * (dm * z2).real(), 2 * (M(t1) * I * z2).real()};
}

double TorusForm::scale() const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(H(i, j)));
    return s > 0 ? s : 1;
}

TorusForm norm_form(const GiraudChart& c) {
    const std::array<Vec3c, 3> v{c.v0, c.v1, c.v2};
    TorusForm f;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.H(i, j) = hermitian_form(v[i], v[j]);
    return f;
}

TorusForm equidistance_form(const GiraudChart& c, const Vec3c& u, const Vec3c& w) {
    const std::array<Vec3c, 3> v{c.v0, c.v1, c.v2};
    Vec3c a, b;
    for (int i = 0; i < 3; ++i) {
        a(i) = hermitian_form(v[i], u);
        b(i) = hermitian_form(v[i], w);
    }
    TorusForm f;
    f.H = a * a.adjoint() - b * b.adjoint();
    return f;
}

TorusForm sphere_form(const GiraudChart& c, const IsometricSphere& s) {
    return equidistance_form(c, q_infinity<Cx>(), s.lift);
}

double giraud_norm(const GiraudChart& c, const TorusPoint& p) {
    const Vec3c v = c.V(p.z1(), p.z2());
    return hermitian_form(v, v).real();
}

DiskMinimum minimize_form(const TorusForm& f) {
    auto g = [&](double t) { return f.K(t) - 2 * std::abs(f.M(t)); };
    constexpr int n = 1024;
    int best = 0;
    double bv = g(0);
    for (int i = 1; i < n; ++i) {
        const double v = g(kTwoPi * i / n);
        if (v < bv) { bv = v; best = i; }
    }
    const double h = kTwoPi / n;
    auto r = boost::math::tools::brent_find_minima(g, h * (best - 1), h * (best + 1), 52);
    DiskMinimum m;
    if (r.second > bv) r = {h * best, bv};
    m.at.t1 = wrap_angle(r.first);
    m.at.t2 = wrap_angle(std::numbers::pi - std::arg(f.M(r.first)));
    m.value = r.second;
    return m;
}

namespace {

// Spinal spheres in Heisenberg coordinates: do they cross? Used when the
// three centres lie on a complex line and the torus chart degenerates.
bool spinal_spheres_cross(const IsometricSphere& s1, const IsometricSphere& s2) {
    bool neg = false, pos = false;
    constexpr int na = 96, nb = 192;
    for (int i = 0; i <= na; ++i) {
        const double al = -std::numbers::pi / 2 + std::numbers::pi * i / na;
        const double rho = s1.radius * std::sqrt(std::max(std::cos(al), 0.0));
        for (int j = 0; j < nb; ++j) {
            const double be = kTwoPi * j / nb;
            HeisPoint p;
            p.z = s1.center.z + std::polar(rho, be);
            p.t = s1.radius * s1.radius * std::sin(al) + s1.center.t - 2 * (p.z * std::conj(s1.center.z)).imag();
            const double m = sphere_margin(s2, p);
            if (m < -1e-12) neg = true;
            if (m > 1e-12) pos = true;
            if (neg && pos) return true;
        }
    }
    return false;
}

}  // namespace

bool spheres_intersect(const IsometricSphere& s1, const IsometricSphere& s2, double eps) {
    if (!balls_overlap(s1, s2)) return false;
    try {
        const TorusForm n = norm_form(make_giraud(s1, s2));
        return minimize_form(n).value < -eps * n.scale();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateTriple) throw;
        return spinal_spheres_cross(s1, s2);
    }
}

TraceCurve trace_curve(const TorusForm& f, int samples) {
    TraceCurve tc;
    tc.form = f;
    const std::vector<double> turns = turning_points(f);

    auto branch = [&](double a, double b, int sign, int m) {
        std::vector<TorusPoint> pts;
        for (int j = 0; j <= m; ++j) {
            const double s = 0.5 * (1 - std::cos(std::numbers::pi * j / m));
            const double t1 = a + (b - a) * s;
            // On a vertical line the branch is the limit from inside the interval.
            double te = t1;
            if (j == 0 && vertical_line(f, a)) te = a + 1e-9;
            if (j == m && vertical_line(f, b)) te = b - 1e-9;
            pts.push_back({t1, branch_t2(f, te, sign)});
        }
        return pts;
    };

    for (double t1 : turns) {
        if (!vertical_line(f, t1)) continue;
        std::vector<TorusPoint> line;
        for (int j = 0; j < samples; ++j) line.push_back({t1, kTwoPi * j / samples});
        tc.loops.push_back(std::move(line));
        tc.closed.push_back(true);
    }
    if (turns.empty()) {
        if (turning_function(f, 0) > 0) return tc;
        for (int sign : {1, -1}) {
            std::vector<TorusPoint> loop;
            for (int j = 0; j < samples; ++j) {
                const double t1 = kTwoPi * j / samples;
                loop.push_back({t1, branch_t2(f, t1, sign)});
            }
            unwrap(loop);
            tc.loops.push_back(std::move(loop));
            tc.closed.push_back(true);
        }
        return tc;
    }
    const std::size_t nt = turns.size();
    for (std::size_t i = 0; i < nt; ++i) {
        const double a = turns[i];
        double b = turns[(i + 1) % nt];
        if (b <= a) b += kTwoPi;
        if (turning_function(f, 0.5 * (a + b)) > 0) continue;
        const int m = std::max(24, static_cast<int>(samples * (b - a) / kTwoPi));
        std::vector<TorusPoint> plus = branch(a, b, 1, m);
        std::vector<TorusPoint> minus = branch(a, b, -1, m);
        const bool va = vertical_line(f, a), vb = vertical_line(f, b);
        // Branches ending on a vertical line do not join there: the path stays open.
        if (va && vb) {
            for (auto* path : {&plus, &minus}) {
                unwrap(*path);
                tc.loops.push_back(std::move(*path));
                tc.closed.push_back(false);
            }
            continue;
        }
        if (vb) {
            std::reverse(plus.begin(), plus.end());
            std::reverse(minus.begin(), minus.end());
        }
        std::vector<TorusPoint> loop = plus;
        const int last = va || vb ? 0 : 1;
        for (int j = m - 1; j >= last; --j) loop.push_back(minus[static_cast<std::size_t>(j)]);
        unwrap(loop);
        tc.loops.push_back(std::move(loop));
        tc.closed.push_back(!(va || vb));
    }
    return tc;
}

std::vector<TorusPoint> singular_points(const TorusForm& f) {
    std::vector<TorusPoint> out;
    const double tol = 1e-9 * f.scale();
    for (double t1 : turning_points(f)) {
        if (vertical_line(f, t1)) {
            // F = (t1 - t*) h near the line; nodes are the zeros of h on it.
            const Cx z1 = std::polar(1.0, t1), I(0, 1);
            const double a = 2 * (f.H(1, 0) * I * z1).real();
            const Cx m = f.H(2, 1) * (-I) * std::conj(z1);
            if (std::abs(m) < tol) continue;
            const double c = -a / (2 * std::abs(m));
            if (std::abs(c) > 1) continue;
            for (int sign : {1, -1}) out.push_back({t1, wrap_angle(-std::arg(m) + sign * std::acos(c))});
            continue;
        }
        TorusPoint p{t1, wrap_angle(branch_t2(f, t1, 1))};
        if (std::abs(f(p)) < tol && f.gradient(p.t1, p.t2).norm() < 1e-6 * f.scale()) out.push_back(p);
    }
    return out;
}

TraceCurve trace_curve(const GiraudChart& c, const Vec3c& u, const Vec3c& v, int samples) {
    return trace_curve(equidistance_form(c, u, v), samples);
}

std::vector<TorusPoint> form_intersections(const TorusForm& f, const TorusForm& g) {
    const FormLaurent F = form_laurent(f), G = form_laurent(g);
    const Laurent delta = F.M * G.Mbar - F.Mbar * G.M;
    const Laurent num = G.K * F.Mbar - F.K * G.Mbar;
    const Laurent P = num * (F.K * G.M - G.K * F.M) - delta * delta;
    std::vector<TorusPoint> out;
    auto add = [&](TorusPoint p) {
        if (!polish_pair(f, g, p)) return;
        p.t1 = wrap_angle(p.t1);
        p.t2 = wrap_angle(p.t2);
        for (const auto& q : out)
            if (torus_distance(p, q) < 1e-8) return;
        out.push_back(p);
    };
    for (double t1 : unit_circle_roots(P, 1e-3)) {
        const Cx z1 = std::polar(1.0, t1);
        auto ev = [&](const Laurent& l) {
            Cx s = 0;
            for (int e = l.lo; e <= l.hi(); ++e) s += l.at(e) * std::pow(z1, e);
            return s;
        };
        // Two common zeros can share t1, where the linear solve for z2
        // degenerates; seed Newton from both branches of each curve as well.
        for (int sign : {1, -1}) {
            add({t1, branch_t2(f, t1, sign)});
            add({t1, branch_t2(g, t1, sign)});
        }
        const Cx d = ev(delta);
        if (std::abs(d) < 1e-12 * f.scale() * g.scale()) continue;
        const Cx z2 = ev(num) / d;
        if (std::abs(std::abs(z2) - 1) > 1e-2) continue;
        add({t1, std::arg(z2)});
    }
    std::sort(out.begin(), out.end(), [](const TorusPoint& a, const TorusPoint& b) {
        return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
    });
    return out;
}

std::vector<TorusPoint> boundary_intersections(const GiraudChart& c, const Vec3c& u, const Vec3c& v) {
    return form_intersections(norm_form(c), equidistance_form(c, u, v));
}

const char* to_string(DiskPosition p) {
    switch (p) {
        case DiskPosition::Inside: return "inside";
        case DiskPosition::Outside: return "outside";
        case DiskPosition::Crossing: return "crossing";
    }
    return "?";
}

DiskTest disk_inside_sphere(const GiraudChart& c, const IsometricSphere& s) {
    const TorusForm n = norm_form(c);
    const TorusForm f = sphere_form(c, s);
    DiskTest r;
    const DiskMinimum m = minimize_form(n);
    if (m.value >= 0) return r;
    if (!form_intersections(n, f).empty()) {
        r.position = DiskPosition::Crossing;
        return r;
    }
    for (const auto& loop : trace_curve(f).loops)
        for (const auto& p : loop)
            if (n(p) < 0) {
                r.position = DiskPosition::Crossing;
                return r;
            }
    double closest = 1e300;
    for (const auto& loop : trace_curve(n).loops)
        for (const auto& p : loop) closest = std::min(closest, std::abs(f(p)) / f.scale());
    if (closest < 1e-7) {
        r.position = DiskPosition::Crossing;
        r.tangency = true;
        return r;
    }
    r.position = f(m.at) > 0 ? DiskPosition::Inside : DiskPosition::Outside;
    return r;
}

}  // namespace chyp
