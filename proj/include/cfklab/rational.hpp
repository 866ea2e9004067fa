#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cfklab {

/// Exact rational number. Gradings in this library live in (1/2)Z, but the
/// arithmetic is kept fully general.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_even_integer() const { return den_ == 1 && num_ % 2 == 0; }

    Rational operator-() const { return Rational(-num_, den_, no_reduce_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator*(std::int64_t k, const Rational& a) {
        return Rational(k * a.num_, a.den_);
    }
    friend Rational operator/(const Rational& a, std::int64_t k) {
        return Rational(a.num_, a.den_ * k);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Lowest-terms string, "p" for integers and "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p" or "p/q" with optional leading sign.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                std::int64_t n = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return Rational(n);
            }
            std::int64_t n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument(s);
            std::int64_t d = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1 || d == 0) throw std::invalid_argument(s);
            return Rational(n, d);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational: '" + s + "'");
        }
    }

private:
    struct no_reduce_tag {};
    Rational(std::int64_t n, std::int64_t d, no_reduce_tag) : num_(n), den_(d) {}

    void reduce() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace cfklab
