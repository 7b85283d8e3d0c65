#include "gpcert/numeric_types.hpp"

#include <algorithm>

#include "gpcert/errors.hpp"

namespace gpcert {

std::string to_string(u128 value)
{
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view text)
{
    if (text.empty()) {
        throw ParseError("empty integer");
    }
    constexpr u128 kMax = ~static_cast<u128>(0);
    u128 value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw ParseError("not a decimal integer: " + std::string(text));
        }
        const auto digit = static_cast<unsigned>(c - '0');
        if (value > (kMax - digit) / 10) {
            throw ParseError("integer exceeds 128 bits: " + std::string(text));
        }
        value = value * 10 + digit;
    }
    return value;
}

BigInt to_bigint(u128 value)
{
    BigInt hi = static_cast<u64>(value >> 64);
    BigInt lo = static_cast<u64>(value);
    return (hi << 64) | lo;
}

u128 to_u128(const BigInt& value)
{
    if (value == 0) {
        return 0;
    }
    if (value < 0 || msb(value) >= 128) {
        throw RangeError("integer does not fit in 128 bits");
    }
    const BigInt mask = (BigInt(1) << 64) - 1;
    const u64 lo = static_cast<u64>(value & mask);
    const u64 hi = static_cast<u64>(value >> 64);
    return (static_cast<u128>(hi) << 64) | lo;
}

} // namespace gpcert
