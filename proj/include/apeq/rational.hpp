#ifndef APEQ_RATIONAL_HPP
#define APEQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace apeq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational: an element of Q(i), kept exact.
///
/// The coefficient domain for everything in this library. Plain rationals
/// are not enough because several solution families need constants with
/// lambda^q = -1 (q even), which first exist in Q(i).
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(int v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    ComplexRational(long long v) : re_(v) {}                 // NOLINT(google-explicit-constructor)
    ComplexRational(const BigInt& v) : re_(v) {}             // NOLINT(google-explicit-constructor)
    ComplexRational(const Rational& v) : re_(v) {}           // NOLINT(google-explicit-constructor)
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }
    static ComplexRational from_parts(long long re_num, long long re_den,
                                      long long im_num = 0, long long im_den = 1) {
        return {Rational(re_num, re_den), Rational(im_num, im_den)};
    }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ComplexRational conj() const { return {re_, -im_}; }

    /// |z|^2 as a rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o) {
        Rational n = o.norm();
        if (n.is_zero()) throw std::domain_error("ComplexRational: division by zero");
        ComplexRational c = o.conj();
        *this *= c;
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

    ComplexRational pow(unsigned e) const {
        ComplexRational acc(1);
        ComplexRational base = *this;
        while (e != 0) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    /// Renders like "0", "-3/2", "i", "2-3i", "1/2+5/7i".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        if (!re_.is_zero()) out << re_;
        if (!im_.is_zero()) {
            if (!re_.is_zero() && im_ > 0) out << '+';
            if (im_ == -1)
                out << '-';
            else if (im_ != 1)
                out << im_;
            out << 'i';
        }
        return out.str();
    }

private:
    Rational re_;
    Rational im_;
};

inline std::ostream& operator<<(std::ostream& os, const ComplexRational& v) { return os << v.str(); }

}  // namespace apeq

#endif  // APEQ_RATIONAL_HPP
