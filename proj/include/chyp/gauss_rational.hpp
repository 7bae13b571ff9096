// Exact arithmetic in Q(i), usable as an Eigen scalar.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <complex>
#include <ostream>
#include <string>

namespace chyp {

using Rational = boost::multiprecision::mpq_rational;

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int re) : re_(re) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational d = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / d;
        im_ = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

inline const GaussRational I_q{Rational(0), Rational(1)};

inline GaussRational conjugate(const GaussRational& z) { return {z.real(), -z.imag()}; }
inline Rational re(const GaussRational& z) { return z.real(); }
inline Rational im(const GaussRational& z) { return z.imag(); }
inline Rational abs2(const GaussRational& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline std::complex<double> to_complex(const GaussRational& z) {
    return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "a/b" or "a/b+c/di" style text, used in reports.
std::string to_string(const GaussRational& z);
std::string to_string(const Rational& r);

inline std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

}  // namespace chyp

namespace Eigen {
template <>
struct NumTraits<chyp::GaussRational> : GenericNumTraits<chyp::GaussRational> {
    using Real = chyp::GaussRational;
    using NonInteger = chyp::GaussRational;
    using Literal = chyp::GaussRational;
    using Nested = chyp::GaussRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};
}  // namespace Eigen
