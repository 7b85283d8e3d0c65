#pragma once

// Real numbers carried as guaranteed enclosures [lo, hi]. Every operation
// rounds lo toward -inf and hi toward +inf, so the exact value of any
// expression built from exact inputs stays inside the computed interval.

#include <string>
#include <string_view>

#include <mpfr.h>

#include "gpcert/numeric_types.hpp"

namespace gpcert::cert {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMaxEscalatedPrecision = 1024;

enum class Tribool { no, yes, unknown };

constexpr bool is_yes(Tribool t) { return t == Tribool::yes; }

class CertifiedReal {
public:
    CertifiedReal() : CertifiedReal(kDefaultPrecision) {}
    explicit CertifiedReal(Precision prec);
    CertifiedReal(const CertifiedReal& other);
    CertifiedReal(CertifiedReal&& other) noexcept;
    CertifiedReal& operator=(const CertifiedReal& other);
    CertifiedReal& operator=(CertifiedReal&& other) noexcept;
    ~CertifiedReal();

    static CertifiedReal from_int(long value, Precision prec = kDefaultPrecision);
    static CertifiedReal from_bigint(const BigInt& value, Precision prec = kDefaultPrecision);
    static CertifiedReal from_rational(const Rational& value, Precision prec = kDefaultPrecision);
    /// Exact: a double is a dyadic rational.
    static CertifiedReal from_double(double value, Precision prec = kDefaultPrecision);
    /// Decimal literal such as "0.679091" or "1e56", enclosed by directed rounding.
    static CertifiedReal from_decimal(std::string_view text, Precision prec = kDefaultPrecision);
    static CertifiedReal interval(const CertifiedReal& lo_src, const CertifiedReal& hi_src);

    static CertifiedReal pi(Precision prec = kDefaultPrecision);
    /// Euler's number e = exp(1).
    static CertifiedReal euler(Precision prec = kDefaultPrecision);

    Precision precision() const { return mpfr_get_prec(lo_); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    /// Midpoint rounded to nearest; for display only.
    double mid_double() const;

    /// Scientific-notation strings with `digits` significant digits, rounded outward.
    std::string lo_string(int digits = 17) const;
    std::string hi_string(int digits = 17) const;

    bool contains(const Rational& value) const;
    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

    CertifiedReal& operator+=(const CertifiedReal& rhs);
    CertifiedReal& operator-=(const CertifiedReal& rhs);
    CertifiedReal& operator*=(const CertifiedReal& rhs);
    CertifiedReal& operator/=(const CertifiedReal& rhs);

    friend CertifiedReal operator-(const CertifiedReal& x);
    friend CertifiedReal operator+(CertifiedReal a, const CertifiedReal& b) { return a += b; }
    friend CertifiedReal operator-(CertifiedReal a, const CertifiedReal& b) { return a -= b; }
    friend CertifiedReal operator*(CertifiedReal a, const CertifiedReal& b) { return a *= b; }
    friend CertifiedReal operator/(CertifiedReal a, const CertifiedReal& b) { return a /= b; }

    friend CertifiedReal sqrt(const CertifiedReal& x);
    friend CertifiedReal log(const CertifiedReal& x);
    friend CertifiedReal exp(const CertifiedReal& x);
    friend CertifiedReal pow(const CertifiedReal& x, long n);
    friend CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

CertifiedReal sqrt(const CertifiedReal& x);
CertifiedReal log(const CertifiedReal& x);
CertifiedReal exp(const CertifiedReal& x);
/// x^y for x > 0, via exp(y log x).
CertifiedReal pow(const CertifiedReal& x, const CertifiedReal& y);
/// x^n for integer n; x > 0 required when n < 0.
CertifiedReal pow(const CertifiedReal& x, long n);
CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);

/// Certified a < b: yes if a.hi < b.lo, no if a.lo >= b.hi, unknown otherwise.
Tribool less(const CertifiedReal& a, const CertifiedReal& b);
/// Certified a <= b: yes if a.hi <= b.lo, no if a.lo > b.hi.
Tribool less_equal(const CertifiedReal& a, const CertifiedReal& b);

std::string to_string(Tribool t);

} // namespace gpcert::cert
