#include "chyp/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

namespace chyp {

const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::PointAtInfinity: return "PointAtInfinity";
        case ErrorCode::BoundaryPoint: return "BoundaryPoint";
        case ErrorCode::PositiveVector: return "PositiveVector";
        case ErrorCode::NotInSU21: return "NotInSU21";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
        case ErrorCode::UnsupportedN: return "UnsupportedN";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::InvalidWord: return "InvalidWord";
        case ErrorCode::FixesInfinity: return "FixesInfinity";
        case ErrorCode::DegenerateTriple: return "DegenerateTriple";
        case ErrorCode::Tangency: return "Tangency";
        case ErrorCode::OpenCycle: return "OpenCycle";
        case ErrorCode::NonSurface: return "NonSurface";
        case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
        case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const GaussRational& z) {
    if (z.imag() == 0) return to_string(z.real());
    std::string im_part;
    if (z.imag() == 1) im_part = "i";
    else if (z.imag() == -1) im_part = "-i";
    else im_part = to_string(z.imag()) + "i";
    if (z.real() == 0) return im_part;
    if (im_part[0] != '-') im_part = "+" + im_part;
    return to_string(z.real()) + im_part;
}

SignClass classify_vector(const Vec3c& z, double eps_null) {
    if (z.squaredNorm() == 0.0) throw Error(ErrorCode::ZeroVector, "classify_vector");
    const Cx n = hermitian_form(z, z);
    if (std::abs(n.imag()) >= eps_null * std::max(1.0, z.squaredNorm()))
        throw Error(ErrorCode::Parse, "hermitian norm has an imaginary part");
    if (n.real() < -eps_null) return SignClass::Negative;
    if (n.real() > eps_null) return SignClass::Positive;
    return SignClass::Null;
}

SignClass classify_vector(const Vec3q& z) {
    if (z(0) == 0 && z(1) == 0 && z(2) == 0) throw Error(ErrorCode::ZeroVector, "classify_vector");
    const Rational n = re(hermitian_form(z, z));
    if (n < 0) return SignClass::Negative;
    if (n > 0) return SignClass::Positive;
    return SignClass::Null;
}

HoroPoint from_lift_checked(const Vec3c& v, double eps_null) {
    HoroPoint h = from_lift(v);
    if (h.u < -eps_null) throw Error(ErrorCode::PositiveVector, "from_lift needs <v,v> <= 0");
    if (h.u < 0) h.u = 0;
    return h;
}

HeisPoint to_heis(const Vec3c& v) {
    HoroPoint h = from_lift(v);
    return {h.z, h.t};
}

HeisPoint act(const Mat3c& M, const HeisPoint& p) { return to_heis(M * to_lift(p)); }

double heis_norm(const HeisPoint& p) { return std::pow(std::abs(Cx(std::norm(p.z), p.t)), 0.5); }

double cygan_distance(const HoroPoint& a, const HoroPoint& b) {
    const Cx w = a.z - b.z;
    const double s = a.t - b.t + 2.0 * (a.z * std::conj(b.z)).imag();
    return std::pow(std::abs(Cx(std::norm(w) + std::abs(a.u - b.u), s)), 0.5);
}

double cygan_distance(const HeisPoint& a, const HeisPoint& b) {
    return cygan_distance(HoroPoint{a.z, a.t, 0.0}, HoroPoint{b.z, b.t, 0.0});
}

double bergman_distance(const HoroPoint& p, const HoroPoint& q) {
    if (p.u <= 0 || q.u <= 0) throw Error(ErrorCode::BoundaryPoint, "bergman_distance");
    const Vec3c z = to_lift(p), w = to_lift(q);
    const double c2 = std::norm(hermitian_form(z, w)) /
                      (hermitian_form(z, z).real() * hermitian_form(w, w).real());
    return 2.0 * std::acosh(std::sqrt(std::max(1.0, c2)));
}

double su21_residual(const Mat3c& M) {
    const Mat3c J = form_matrix<Cx>();
    const double a = (adjoint_of(M) * J * M - J).cwiseAbs().maxCoeff();
    return std::max(a, std::abs(M.determinant() - 1.0));
}

bool is_su21(const Mat3c& M, double tol) { return su21_residual(M) < tol; }

bool is_su21(const Mat3q& M) {
    const Mat3q J = form_matrix<GaussRational>();
    if (adjoint_of(M) * J * M != J) return false;
    return M.determinant() == GaussRational(1);
}

static const std::array<Cx, 3>& cube_roots() {
    static const std::array<Cx, 3> w{Cx(1, 0), std::polar(1.0, 2 * M_PI / 3), std::polar(1.0, -2 * M_PI / 3)};
    return w;
}

double projective_deviation(const Mat3c& M, const Mat3c& N) {
    double best = INFINITY;
    for (const Cx& w : cube_roots()) best = std::min(best, (M - w * N).cwiseAbs().maxCoeff());
    return best;
}

double identity_deviation(const Mat3c& M) { return projective_deviation(M, Mat3c::Identity()); }

bool projectively_equal(const Mat3q& M, const Mat3q& N) { return M == N; }

double goldman_discriminant(Cx tau) {
    const double a = std::norm(tau);
    return a * a - 8.0 * (tau * tau * tau).real() + 18.0 * a - 27.0;
}

IsometryClass classify_isometry(const Mat3c& M, double eps) {
    if (!is_su21(M, 1e3 * eps)) throw Error(ErrorCode::NotInSU21, "classify_isometry");
    const Cx tau = M.trace();
    const double f = goldman_discriminant(tau);
    if (f > eps) return Loxodromic{};
    if (f < -eps) return Elliptic{true};
    // Repeated eigenvalue: a cube root of unity times unipotent, or a complex reflection.
    for (const Cx& w : cube_roots()) {
        if (std::abs(tau - 3.0 * w) < std::sqrt(eps)) {
            const double dev = (M - w * Mat3c::Identity()).cwiseAbs().maxCoeff();
            if (dev < std::sqrt(eps)) return Elliptic{false};
            return Parabolic{true};
        }
    }
    Eigen::ComplexEigenSolver<Mat3c> es(M, false);
    const auto& ev = es.eigenvalues();
    int bi = 0, bj = 1;
    double bd = INFINITY;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(ev(i) - ev(j)) < bd) { bd = std::abs(ev(i) - ev(j)); bi = i; bj = j; }
    const Cx lambda = 0.5 * (ev(bi) + ev(bj));
    Eigen::JacobiSVD<Mat3c> svd(M - lambda * Mat3c::Identity());
    const auto sv = svd.singularValues();
    if (sv(1) < std::sqrt(eps) * std::max(1.0, sv(0))) return Elliptic{false};
    return Parabolic{false};
}

const char* to_string(const IsometryClass& c) {
    if (std::holds_alternative<Loxodromic>(c)) return "loxodromic";
    if (const auto* p = std::get_if<Parabolic>(&c)) return p->unipotent ? "parabolic(unipotent)" : "parabolic(ellipto)";
    return std::get<Elliptic>(c).regular ? "elliptic(regular)" : "elliptic(special)";
}

Mat3c matrix_power(const Mat3c& M, int k) {
    Mat3c R = Mat3c::Identity();
    Mat3c P = k >= 0 ? M : su21_inverse(M);
    for (int e = std::abs(k); e > 0; e >>= 1) {
        if (e & 1) R = R * P;
        P = P * P;
    }
    return R;
}

Mat3q matrix_power(const Mat3q& M, int k) {
    Mat3q R = Mat3q::Identity();
    Mat3q P = k >= 0 ? M : su21_inverse(M);
    for (int e = std::abs(k); e > 0; e >>= 1) {
        if (e & 1) R = R * P;
        P = P * P;
    }
    return R;
}

}  // namespace chyp
