#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace gpcert {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

std::string to_string(u128 value);

/// Parses a non-negative decimal integer; throws ParseError on junk or overflow.
u128 parse_u128(std::string_view text);

BigInt to_bigint(u128 value);

/// Narrowing conversion; throws RangeError when the value does not fit.
u128 to_u128(const BigInt& value);

} // namespace gpcert
