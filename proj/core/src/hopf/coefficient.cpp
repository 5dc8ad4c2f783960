#include "weyl/hopf/coefficient.hpp"

#include "weyl/errors.hpp"

namespace weyl::hopf {

GaussianRational GaussianRational::rational(long num, long den) {
    if (den == 0) throw InvalidInput("zero denominator");
    return {mpq_class(num, den), 0};
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
    if (o.im_ == 0) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (o.re_ == 0) {
        mpq_class re = -im_ * o.im_;
        im_ = re_ * o.im_;
        re_ = std::move(re);
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den == 0) throw std::domain_error("division by zero coefficient");
    *this *= o.conj();
    re_ /= den;
    im_ /= den;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out = re_.get_str();
    if (im_ != 0) {
        const bool neg = im_ < 0;
        const mpq_class mag = neg ? mpq_class(-im_) : im_;
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (mag != 1) out += mag.get_str() + " ";
        out += "i";
    }
    return out;
}

KappaCoeff& KappaCoeff::operator+=(const KappaCoeff& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
}

KappaCoeff& KappaCoeff::operator-=(const KappaCoeff& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
}

KappaCoeff& KappaCoeff::operator*=(const KappaCoeff& o) {
    if (o.c1_.is_zero()) {
        c0_ *= o.c0_;
        c1_ *= o.c0_;
        return *this;
    }
    GaussianRational c1 = c0_ * o.c1_ + c1_ * o.c0_;
    c0_ *= o.c0_;
    c1_ = std::move(c1);
    return *this;
}

KappaCoeff& KappaCoeff::operator/=(const KappaCoeff& o) {
    if (o.c0_.is_zero()) throw std::domain_error("division by a pure 1/kappa coefficient");
    // (a0 + a1 e) / (b0 + b1 e) = a0/b0 + e (a1/b0 - a0 b1 / b0^2)
    const GaussianRational q0 = c0_ / o.c0_;
    c1_ = (c1_ - q0 * o.c1_) / o.c0_;
    c0_ = q0;
    return *this;
}

std::string KappaCoeff::to_string() const {
    if (c1_.is_zero()) return c0_.to_string();
    std::string k = "(" + c1_.to_string() + ")/kappa";
    if (c0_.is_zero()) return k;
    return c0_.to_string() + " + " + k;
}

}  // namespace weyl::hopf
