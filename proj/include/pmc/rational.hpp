#ifndef PMC_RATIONAL_HPP
#define PMC_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <utility>

#include <pmc/errors.hpp>

namespace pmc {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in canonical form: the denominator
/// is positive and gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(Integer(n)) {}
    Rational(long long n) : value_(Integer(static_cast<long>(n))) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "p" or "p/q" with integer p and positive integer q.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(parse_integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!den.empty() && (den[0] == '+' || den[0] == '-'))
            throw ParseError("denominator must be an unsigned integer: '" + text + "'");
        const Integer q = parse_integer(den);
        if (q <= 0) throw ParseError("denominator must be positive: '" + text + "'");
        return Rational(parse_integer(num), q);
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static Integer parse_integer(const std::string& text) {
        if (text.empty()) throw ParseError("empty number");
        std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
        if (start == text.size()) throw ParseError("malformed number: '" + text + "'");
        for (std::size_t i = start; i < text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("malformed number: '" + text + "'");
        Integer magnitude(text.substr(start), 10);
        return text[0] == '-' ? Integer(-magnitude) : magnitude;
    }

    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

} // namespace pmc

#endif // PMC_RATIONAL_HPP
