#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace tiledual {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational scalar. Kept in lowest terms with positive denominator;
/// all arithmetic is exact, division by zero throws.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = BigRational(BigInt(num), BigInt(den));
    }
    explicit Rational(BigRational v) : v_(std::move(v)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = BigRational(std::move(num), std::move(den));
    }

    /// Parses "7", "-7" or "3/4" style text (the serialized form).
    static Rational parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    /// Largest integer <= *this.
    BigInt floor() const {
        BigInt q, r;
        boost::multiprecision::divide_qr(numerator(), denominator(), q, r);
        if (r != 0 && numerator() < 0) --q;
        return q;
    }

    /// floor() narrowed to long long; throws if out of range.
    long long floor_ll() const;

    double to_double() const { return v_.convert_to<double>(); }
    std::string str() const;

    const BigRational& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRational(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRational(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRational(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(BigRational(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(BigRational(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    BigRational v_{0};
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tiledual
