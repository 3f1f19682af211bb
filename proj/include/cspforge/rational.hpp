#pragma once

#include <gmpxx.h>

#include <iostream>
#include <stdexcept>
#include <string>

namespace cspforge {

// Arbitrary-precision rational, always held in canonical form:
// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}
    explicit Rational(const mpz_class& value) : v_(value) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" in decimal digits, optionally preceded by '-'.
    // Throws std::invalid_argument on malformed text or zero denominator.
    static Rational parse(const std::string& text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }

    // Always "p/q", e.g. "1/1". Scaling factors print in this form so that
    // scripts can compose them uniformly.
    std::string ratio_str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integer exponent; negative exponents require a nonzero value.
    Rational pow(long exponent) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string::size_type slash = s.find('/');
    mpz_class num, den;
    if (slash == std::string::npos) {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational '" + text + "'");
        num = mpz_class(s);
        den = 1;
    } else {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw std::invalid_argument("malformed rational '" + text + "'");
        num = mpz_class(p);
        den = mpz_class(q);
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator '" + text + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

inline Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    bool invert = exponent < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exponent)
                             : static_cast<unsigned long>(exponent);
    if (invert && is_zero())
        throw std::domain_error("zero raised to a negative power");
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(pd.get_mpz_t(), den().get_mpz_t(), e);
    return invert ? Rational(pd, pn) : Rational(pn, pd);
}

// lcm helper used when clearing denominators.
inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace cspforge
