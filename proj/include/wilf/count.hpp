#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace wilf {

// Exact unsigned 128-bit counter. Every arithmetic operation is checked and
// throws ArithmeticOverflow instead of wrapping.
class Count {
public:
    using value_type = unsigned __int128;

    constexpr Count() = default;
    constexpr Count(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr Count from_raw(value_type v) {
        Count c;
        c.value_ = v;
        return c;
    }

    constexpr value_type raw() const { return value_; }

    // Throws ArithmeticOverflow if the value does not fit.
    std::uint64_t to_u64() const;
    double to_double() const { return static_cast<double>(value_); }
    std::string to_string() const;

    // Parses a decimal string; throws InvalidArgument / ArithmeticOverflow.
    static Count parse(const std::string& text);

    Count& operator+=(const Count& other);
    Count& operator-=(const Count& other);
    Count& operator*=(const Count& other);

    friend Count operator+(Count a, const Count& b) { return a += b; }
    friend Count operator-(Count a, const Count& b) { return a -= b; }
    friend Count operator*(Count a, const Count& b) { return a *= b; }

    friend constexpr bool operator==(const Count&, const Count&) = default;
    friend constexpr std::strong_ordering operator<=>(const Count& a, const Count& b) {
        return a.value_ <=> b.value_;
    }

private:
    value_type value_ = 0;
};

// Largest s with s*s <= v.
Count isqrt(Count v);

}  // namespace wilf
