#include "wilf/count.hpp"

#include <algorithm>
#include <limits>

#include "wilf/errors.hpp"

namespace wilf {

std::uint64_t Count::to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max()) {
        throw ArithmeticOverflow("count " + to_string() + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(value_);
}

std::string Count::to_string() const {
    if (value_ == 0) return "0";
    std::string digits;
    value_type v = value_;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Count Count::parse(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty integer");
    Count result;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw InvalidArgument("not a nonnegative integer: '" + text + "'");
        result *= Count(10);
        result += Count(static_cast<std::uint64_t>(ch - '0'));
    }
    return result;
}

Count& Count::operator+=(const Count& other) {
    if (__builtin_add_overflow(value_, other.value_, &value_)) {
        throw ArithmeticOverflow("128-bit addition overflow");
    }
    return *this;
}

Count& Count::operator-=(const Count& other) {
    if (__builtin_sub_overflow(value_, other.value_, &value_)) {
        throw ArithmeticOverflow("128-bit subtraction underflow");
    }
    return *this;
}

Count& Count::operator*=(const Count& other) {
    if (__builtin_mul_overflow(value_, other.value_, &value_)) {
        throw ArithmeticOverflow("128-bit multiplication overflow");
    }
    return *this;
}

Count isqrt(Count v) {
    using U = Count::value_type;
    const U n = v.raw();
    if (n < 2) return v;
    // Newton iteration from an over-estimate; decreases monotonically to floor(sqrt(n)).
    U x = n;
    U y = n / 2 + (n & 1);
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return Count::from_raw(x);
}

}  // namespace wilf
