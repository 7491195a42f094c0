#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace certify {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

std::string rat_to_string(const Rat& q);

/// Element of Q(i), the exact coefficient field used everywhere.
/// Both components are kept in lowest terms with positive denominator
/// (cpp_rational maintains that canonical form), so equality is plain
/// structural equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}              // NOLINT: implicit by design
    GaussianRational(Int n) : re_(std::move(n)) {}    // NOLINT
    GaussianRational(Rat re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rat(0), Rat(1)); }
    static GaussianRational fraction(long num, long den);

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_ == 1 && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero() && !im_.is_zero(); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// re^2 + im^2, a nonnegative rational; zero iff the element is zero.
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// "0", "2", "-1/2", "i", "-i", "2*i", "1+i", "1-2/3*i".
    std::string to_string() const;

private:
    Rat re_{0};
    Rat im_{0};
};

using GR = GaussianRational;

}  // namespace certify
