#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace indyn {

/// Exact rational number with 64-bit numerator/denominator and 128-bit
/// intermediates. Always stored normalized (den > 0, gcd(num, den) = 1), so
/// equality is fieldwise. Throws std::overflow_error when a reduced value no
/// longer fits; masses handled in this project stay far below that.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    // Accepts "p" or "p/q".
    static Rat parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rat(parse_int(text), 1);
        }
        return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rat operator-() const { return make(-wide(num_), den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static constexpr i128 wide(std::int64_t v) { return static_cast<i128>(v); }

    static u128 gcd128(u128 a, u128 b) {
        while (b != 0) {
            const u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const u128 mag = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
        const u128 g = mag == 0 ? static_cast<u128>(d) : gcd128(mag, static_cast<u128>(d));
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
        constexpr i128 hi = static_cast<i128>(INT64_MAX);
        constexpr i128 lo = static_cast<i128>(INT64_MIN);
        if (n > hi || n < lo || d > hi) throw std::overflow_error("rational overflow");
        Rat r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static std::int64_t parse_int(std::string_view s) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
        }
        return value;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace indyn
