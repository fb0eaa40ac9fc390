#pragma once

// Exact rational numbers over 64-bit integers.
//
// Always stored in lowest terms with a positive denominator. Intermediate
// products are formed in 128 bits; a result that does not fit in 64 bits
// throws instead of wrapping.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knf {

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int_type n, int_type d) { assign(n, d); }

    [[nodiscard]] constexpr int_type num() const { return num_; }
    [[nodiscard]] constexpr int_type den() const { return den_; }

    [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
    [[nodiscard]] constexpr bool is_negative() const { return num_ < 0; }

    /// True iff the value is an odd integer.
    [[nodiscard]] constexpr bool is_odd_integer() const { return den_ == 1 && (num_ % 2 != 0); }
    [[nodiscard]] constexpr bool is_even_integer() const { return den_ == 1 && (num_ % 2 == 0); }

    /// Integer value; throws if not an integer.
    [[nodiscard]] int_type to_integer() const {
        if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
        return num_;
    }

    [[nodiscard]] int_type floor() const {
        int_type q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const;

    /// Parses "n", "-n", "n/d". Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 n, __int128 d);
    void assign(int_type n, int_type d) { *this = from_wide(n, d); }

    int_type num_ = 0;
    int_type den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace knf
