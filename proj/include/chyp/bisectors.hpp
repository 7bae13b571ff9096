// Isometric spheres, Giraud tori in spinal coordinates and their trace curves.
#pragma once

#include "chyp/core.hpp"
#include "chyp/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chyp {

struct IsometricSphere {
    std::string word;
    int k = 0;
    HeisPoint center;
    double radius = 0;
    // A^k g a^k and its natural centre lift (A^k g a^k)^{-1} q_inf.
    Mat3c element;
    Vec3c lift;
};

IsometricSphere isometric_sphere(const GroupElement& g, int k = 0);
IsometricSphere isometric_sphere(const RepresentationBundle& b, const std::string& word, int k = 0);
IsometricSphere translate_sphere(const IsometricSphere& s, int k, const Mat3c& A);

// Exact centre and fourth power of the radius, for Gaussian-rational g.
struct ExactSphere {
    HeisPointQ center;
    Rational radius4;
};
ExactSphere exact_isometric_sphere(const Mat3q& g);

bool same_sphere(const IsometricSphere& a, const IsometricSphere& b, double tol = 1e-7);
// Cygan distance to the centre minus the radius; negative inside.
double sphere_margin(const IsometricSphere& s, const HeisPoint& p);
bool balls_overlap(const IsometricSphere& a, const IsometricSphere& b, double slack = 1e-12);

struct GiraudChart {
    Vec3c p, q, r;
    Vec3c v0, v1, v2;
    Vec3c V(Cx z1, Cx z2) const { return v0 + z1 * v1 + z2 * v2; }
    Vec3c V(double t1, double t2) const { return V(std::polar(1.0, t1), std::polar(1.0, t2)); }
};

// Chart on the torus of I(G1^{-1}) and I(G2^{-1}) from lifts q = G1 q_inf, r = G2 q_inf.
GiraudChart make_giraud(const Vec3c& q, const Vec3c& r);
GiraudChart make_giraud(const GroupElement& g1, const GroupElement& g2);
GiraudChart make_giraud(const IsometricSphere& s1, const IsometricSphere& s2);

struct TorusPoint {
    double t1 = 0, t2 = 0;
    Cx z1() const { return std::polar(1.0, t1); }
    Cx z2() const { return std::polar(1.0, t2); }
};

// F(u) = sum H_ij u_i conj(u_j), u = (1, z1, z2), H hermitian.
struct TorusForm {
    Mat3c H = Mat3c::Zero();
    double operator()(double t1, double t2) const;
    double operator()(const TorusPoint& p) const { return (*this)(p.t1, p.t2); }
    // F = K(t1) + 2 Re(M(t1) z2)
    double K(double t1) const;
    Cx M(double t1) const;
    Eigen::Vector2d gradient(double t1, double t2) const;
    double scale() const;
};

TorusForm norm_form(const GiraudChart& c);
// |<V,u>|^2 - |<V,v>|^2
TorusForm equidistance_form(const GiraudChart& c, const Vec3c& u, const Vec3c& v);
// Positive exactly where V lies inside the sphere.
TorusForm sphere_form(const GiraudChart& c, const IsometricSphere& s);

double giraud_norm(const GiraudChart& c, const TorusPoint& p);

struct DiskMinimum {
    TorusPoint at;
    double value = 0;
};
DiskMinimum minimize_form(const TorusForm& f);

bool spheres_intersect(const IsometricSphere& s1, const IsometricSphere& s2, double eps = 1e-10);

// Paths of a torus curve, angles unwrapped along each. A closed path joins its
// last point to the first; open paths end on nodes of a vertical circle.
struct TraceCurve {
    TorusForm form;
    std::vector<std::vector<TorusPoint>> loops;
    std::vector<bool> closed;
    bool empty() const { return loops.empty(); }
};

TraceCurve trace_curve(const TorusForm& f, int samples = 256);
// Nodes of the curve F = 0, where the gradient vanishes.
std::vector<TorusPoint> singular_points(const TorusForm& f);
TraceCurve trace_curve(const GiraudChart& c, const Vec3c& u, const Vec3c& v, int samples = 256);

// Common zeros of two torus forms, polished to residual below 1e-12.
std::vector<TorusPoint> form_intersections(const TorusForm& f, const TorusForm& g);
std::vector<TorusPoint> boundary_intersections(const GiraudChart& c, const Vec3c& u, const Vec3c& v);

enum class DiskPosition { Inside, Outside, Crossing };
struct DiskTest {
    DiskPosition position = DiskPosition::Outside;
    bool tangency = false;
};
const char* to_string(DiskPosition p);
DiskTest disk_inside_sphere(const GiraudChart& c, const IsometricSphere& s);

double wrap_angle(double t);  // into [0, 2pi)
double torus_distance(const TorusPoint& a, const TorusPoint& b);

}  // namespace chyp
