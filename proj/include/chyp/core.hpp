// Linear algebra on C^{2,1}, Heisenberg coordinates and the Cygan metric.
//
// Everything dense is templated on the scalar so the same code runs on
// std::complex<double> and on exact Gaussian rationals.
#pragma once

#include "chyp/errors.hpp"
#include "chyp/gauss_rational.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <complex>
#include <variant>

namespace chyp {

using Cx = std::complex<double>;

template <class S> using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S> using Mat3 = Eigen::Matrix<S, 3, 3>;
using Vec3c = Vec3<Cx>;
using Mat3c = Mat3<Cx>;
using Vec3q = Vec3<GaussRational>;
using Mat3q = Mat3<GaussRational>;

inline Cx conjugate(const Cx& z) { return std::conj(z); }
inline double re(const Cx& z) { return z.real(); }
inline double im(const Cx& z) { return z.imag(); }
inline double abs2(const Cx& z) { return std::norm(z); }

template <class S> struct RealOf;
template <> struct RealOf<Cx> { using type = double; };
template <> struct RealOf<GaussRational> { using type = Rational; };
template <class S> using real_t = typename RealOf<S>::type;

// Tolerances used by the float predicates. Exact mode ignores them.
struct Tolerances {
    double null = 1e-10;
    double classify = 1e-9;
    double relation = 1e-9;
};

enum class SignClass { Negative, Null, Positive };

template <class S> struct HeisPointT {
    S z{};
    real_t<S> t{};
    friend bool operator==(const HeisPointT&, const HeisPointT&) = default;
};
template <class S> struct HoroPointT {
    S z{};
    real_t<S> t{};
    real_t<S> u{};
};
using HeisPoint = HeisPointT<Cx>;
using HoroPoint = HoroPointT<Cx>;
using HeisPointQ = HeisPointT<GaussRational>;

struct Loxodromic {};
struct Parabolic { bool unipotent = false; };
struct Elliptic { bool regular = false; };
using IsometryClass = std::variant<Loxodromic, Parabolic, Elliptic>;

// <z,w> = z1 conj(w3) + z2 conj(w2) + z3 conj(w1)
template <class S> S hermitian_form(const Vec3<S>& z, const Vec3<S>& w) {
    return z(0) * conjugate(w(2)) + z(1) * conjugate(w(1)) + z(2) * conjugate(w(0));
}

template <class S> Vec3<S> box_product(const Vec3<S>& p, const Vec3<S>& q) {
    return Vec3<S>(conjugate(p(0) * q(1) - p(1) * q(0)),
                   conjugate(p(2) * q(0) - p(0) * q(2)),
                   conjugate(p(1) * q(2) - p(2) * q(1)));
}

template <class S> Mat3<S> form_matrix() {
    Mat3<S> J = Mat3<S>::Zero();
    J(0, 2) = S(1);
    J(1, 1) = S(1);
    J(2, 0) = S(1);
    return J;
}

template <class S> Mat3<S> adjoint_of(const Mat3<S>& M) {
    Mat3<S> R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R(i, j) = conjugate(M(j, i));
    return R;
}

// Inverse of an element of U(2,1): J M^* J.
template <class S> Mat3<S> su21_inverse(const Mat3<S>& M) {
    const Mat3<S> J = form_matrix<S>();
    return J * adjoint_of(M) * J;
}

template <class S> Vec3<S> q_infinity() { return Vec3<S>(S(1), S(0), S(0)); }

template <class S> Vec3<S> to_lift(const HoroPointT<S>& h) {
    using R = real_t<S>;
    S first(R(-abs2(h.z) - h.u) / 2, R(h.t) / 2);
    return Vec3<S>(first, h.z, S(1));
}
template <class S> Vec3<S> to_lift(const HeisPointT<S>& p) {
    return to_lift(HoroPointT<S>{p.z, p.t, real_t<S>(0)});
}

template <class S> HoroPointT<S> from_lift(const Vec3<S>& v) {
    if (v(2) == S(0)) throw Error(ErrorCode::PointAtInfinity, "third coordinate vanishes");
    Vec3<S> w = v / v(2);
    HoroPointT<S> h;
    h.z = w(1);
    h.u = -re(hermitian_form(w, w));
    h.t = im(w(0)) * 2;
    return h;
}

template <class S> HeisPointT<S> heis_mul(const HeisPointT<S>& a, const HeisPointT<S>& b) {
    return {a.z + b.z, a.t + b.t + im(a.z * conjugate(b.z)) * 2};
}
template <class S> HeisPointT<S> heis_inverse(const HeisPointT<S>& a) { return {-a.z, -a.t}; }

template <class S> Mat3<S> heis_translation_matrix(const HeisPointT<S>& p) {
    using R = real_t<S>;
    Mat3<S> T = Mat3<S>::Identity();
    T(0, 1) = -conjugate(p.z);
    T(0, 2) = S(R(-abs2(p.z)) / 2, R(p.t) / 2);
    T(1, 2) = p.z;
    return T;
}

// The action of A = T_{(-2,0)} on the Heisenberg group, and of its powers.
template <class S> HeisPointT<S> a_power(const HeisPointT<S>& p, int m) {
    return {p.z - S(2 * m), p.t + im(p.z) * (4 * m)};
}
template <class S> HeisPointT<S> a_action(const HeisPointT<S>& p) { return a_power(p, 1); }

template <class S> Mat3<S> complex_reflection(const Vec3<S>& c) {
    const S n = hermitian_form(c, c);
    if (!(re(n) > 0)) throw Error(ErrorCode::NotPositive, "polar vector must be positive");
    Mat3<S> M;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            M(i, j) = (i == j ? S(-1) : S(0)) + S(2) * c(i) * conjugate(c(2 - j)) / n;
    return M;
}

template <class S>
Vec3<S> polar_vector_of_ccircle(const HeisPointT<S>& center, const real_t<S>& r) {
    using R = real_t<S>;
    if (!(r > 0)) throw Error(ErrorCode::NonPositiveRadius, "C-circle radius");
    S first(R(r * r - abs2(center.z)) / 2, R(center.t) / 2);
    return Vec3<S>(first, center.z, S(1));
}

template <class S> Mat3c to_complex(const Mat3<S>& M) {
    Mat3c R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R(i, j) = to_complex(M(i, j));
    return R;
}
inline Cx to_complex(const Cx& z) { return z; }
template <class S> Vec3c to_complex(const Vec3<S>& v) {
    return Vec3c(to_complex(v(0)), to_complex(v(1)), to_complex(v(2)));
}

SignClass classify_vector(const Vec3c& z, double eps_null);
SignClass classify_vector(const Vec3q& z);

HoroPoint from_lift_checked(const Vec3c& v, double eps_null);
HeisPoint to_heis(const Vec3c& v);
HeisPoint act(const Mat3c& M, const HeisPoint& p);

double heis_norm(const HeisPoint& p);
double cygan_distance(const HoroPoint& a, const HoroPoint& b);
double cygan_distance(const HeisPoint& a, const HeisPoint& b);
double bergman_distance(const HoroPoint& p, const HoroPoint& q);

// max |M^* J M - J| and |det M - 1|
double su21_residual(const Mat3c& M);
bool is_su21(const Mat3c& M, double tol);
bool is_su21(const Mat3q& M);

// min over cube roots of unity w of max_ij |M - w N|.
double projective_deviation(const Mat3c& M, const Mat3c& N);
double identity_deviation(const Mat3c& M);
bool projectively_equal(const Mat3q& M, const Mat3q& N);

double goldman_discriminant(Cx trace);
IsometryClass classify_isometry(const Mat3c& M, double eps_class);
const char* to_string(const IsometryClass& c);

Mat3c matrix_power(const Mat3c& M, int k);
Mat3q matrix_power(const Mat3q& M, int k);

}  // namespace chyp
