#include "certify/rational.hpp"

namespace certify {

std::string rat_to_string(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

GaussianRational GaussianRational::fraction(long num, long den) {
    if (den == 0)
        throw Error("fraction with zero denominator");
    return GaussianRational(Rat(Int(num), Int(den)));
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        throw Error("division by zero in Q(i)");
    const Rat n = norm();
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    const Rat re = re_ * o.re_ - im_ * o.im_;
    const Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (is_zero())
        return "0";
    if (is_real())
        return rat_to_string(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat_to_string(im_) + "*i";
    if (re_.is_zero())
        return imag;
    if (im_ > 0)
        return rat_to_string(re_) + "+" + imag;
    // negative imaginary part already carries its sign
    return rat_to_string(re_) + imag;
}

}  // namespace certify
