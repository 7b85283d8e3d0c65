#include "gpcert/certified_real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>

#include "gpcert/errors.hpp"

namespace gpcert::cert {

namespace {

Precision joint(const CertifiedReal& a, const CertifiedReal& b)
{
    return std::max(a.precision(), b.precision());
}

struct Scratch {
    explicit Scratch(Precision prec) { mpfr_init2(value, prec); }
    ~Scratch() { mpfr_clear(value); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
    mpfr_t value;
};

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd)
{
    if (mpfr_nan_p(x)) {
        return "nan";
    }
    if (mpfr_inf_p(x)) {
        return mpfr_sgn(x) > 0 ? "inf" : "-inf";
    }
    if (mpfr_zero_p(x)) {
        return "0";
    }
    mpfr_exp_t exponent = 0;
    char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), x, rnd);
    std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
    std::string mantissa(raw);
    std::string sign;
    if (!mantissa.empty() && mantissa.front() == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    // raw encodes 0.mantissa * 10^exponent.
    std::string out = sign + mantissa.substr(0, 1);
    if (mantissa.size() > 1) {
        std::string tail = mantissa.substr(1);
        while (!tail.empty() && tail.back() == '0') {
            tail.pop_back();
        }
        if (!tail.empty()) {
            out += "." + tail;
        }
    }
    const long e10 = static_cast<long>(exponent) - 1;
    if (e10 != 0) {
        out += "e" + std::to_string(e10);
    }
    return out;
}

} // namespace

CertifiedReal::CertifiedReal(Precision prec)
{
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

CertifiedReal::CertifiedReal(const CertifiedReal& other)
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

CertifiedReal::CertifiedReal(CertifiedReal&& other) noexcept
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& other)
{
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& other) noexcept
{
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

CertifiedReal::~CertifiedReal()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

CertifiedReal CertifiedReal::from_int(long value, Precision prec)
{
    CertifiedReal r(prec);
    mpfr_set_si(r.lo_, value, MPFR_RNDD);
    mpfr_set_si(r.hi_, value, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_bigint(const BigInt& value, Precision prec)
{
    CertifiedReal r(prec);
    mpfr_set_z(r.lo_, value.backend().data(), MPFR_RNDD);
    mpfr_set_z(r.hi_, value.backend().data(), MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_rational(const Rational& value, Precision prec)
{
    CertifiedReal r(prec);
    mpfr_set_q(r.lo_, value.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.backend().data(), MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_double(double value, Precision prec)
{
    CertifiedReal r(std::max<Precision>(prec, 53));
    mpfr_set_d(r.lo_, value, MPFR_RNDD);
    mpfr_set_d(r.hi_, value, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_decimal(std::string_view text, Precision prec)
{
    CertifiedReal r(prec);
    const std::string s(text);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
        throw ParseError("not a decimal number: " + s);
    }
    return r;
}

CertifiedReal CertifiedReal::interval(const CertifiedReal& lo_src, const CertifiedReal& hi_src)
{
    CertifiedReal r(joint(lo_src, hi_src));
    mpfr_set(r.lo_, lo_src.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_src.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) {
        throw DomainError("interval: lo exceeds hi");
    }
    return r;
}

CertifiedReal CertifiedReal::pi(Precision prec)
{
    CertifiedReal r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::euler(Precision prec)
{
    return exp(from_int(1, prec));
}

double CertifiedReal::mid_double() const
{
    Scratch m(precision() + 1);
    mpfr_add(m.value, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m.value, m.value, 1, MPFR_RNDN);
    return mpfr_get_d(m.value, MPFR_RNDN);
}

std::string CertifiedReal::lo_string(int digits) const
{
    return format(lo_, digits, MPFR_RNDD);
}

std::string CertifiedReal::hi_string(int digits) const
{
    return format(hi_, digits, MPFR_RNDU);
}

bool CertifiedReal::contains(const Rational& value) const
{
    return mpfr_cmp_q(lo_, value.backend().data()) <= 0 &&
           mpfr_cmp_q(hi_, value.backend().data()) >= 0;
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& rhs)
{
    const Precision prec = joint(*this, rhs);
    mpfr_prec_round(lo_, prec, MPFR_RNDD);
    mpfr_prec_round(hi_, prec, MPFR_RNDU);
    mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
    return *this;
}

CertifiedReal& CertifiedReal::operator-=(const CertifiedReal& rhs)
{
    if (&rhs == this) {
        const CertifiedReal copy(rhs);
        return *this -= copy;
    }
    const Precision prec = joint(*this, rhs);
    mpfr_prec_round(lo_, prec, MPFR_RNDD);
    mpfr_prec_round(hi_, prec, MPFR_RNDU);
    mpfr_sub(lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
    return *this;
}

CertifiedReal& CertifiedReal::operator*=(const CertifiedReal& rhs)
{
    const Precision prec = joint(*this, rhs);
    Scratch lo(prec);
    Scratch hi(prec);
    Scratch t(prec);
    bool first = true;
    for (mpfr_srcptr a : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
        for (mpfr_srcptr b : {rhs.lo_, rhs.hi_}) {
            mpfr_mul(t.value, a, b, MPFR_RNDD);
            if (first || mpfr_less_p(t.value, lo.value)) {
                mpfr_set(lo.value, t.value, MPFR_RNDD);
            }
            mpfr_mul(t.value, a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(t.value, hi.value)) {
                mpfr_set(hi.value, t.value, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_set_prec(lo_, prec);
    mpfr_set_prec(hi_, prec);
    mpfr_set(lo_, lo.value, MPFR_RNDD);
    mpfr_set(hi_, hi.value, MPFR_RNDU);
    return *this;
}

CertifiedReal& CertifiedReal::operator/=(const CertifiedReal& rhs)
{
    if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) {
        throw DomainError("certified division by an enclosure containing zero");
    }
    const Precision prec = joint(*this, rhs);
    Scratch lo(prec);
    Scratch hi(prec);
    Scratch t(prec);
    bool first = true;
    for (mpfr_srcptr a : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
        for (mpfr_srcptr b : {rhs.lo_, rhs.hi_}) {
            mpfr_div(t.value, a, b, MPFR_RNDD);
            if (first || mpfr_less_p(t.value, lo.value)) {
                mpfr_set(lo.value, t.value, MPFR_RNDD);
            }
            mpfr_div(t.value, a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(t.value, hi.value)) {
                mpfr_set(hi.value, t.value, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_set_prec(lo_, prec);
    mpfr_set_prec(hi_, prec);
    mpfr_set(lo_, lo.value, MPFR_RNDD);
    mpfr_set(hi_, hi.value, MPFR_RNDU);
    return *this;
}

CertifiedReal operator-(const CertifiedReal& x)
{
    CertifiedReal r(x.precision());
    mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
    return r;
}

CertifiedReal sqrt(const CertifiedReal& x)
{
    if (mpfr_sgn(x.lo()) < 0) {
        throw DomainError("certified sqrt of an enclosure reaching below zero");
    }
    CertifiedReal r(x.precision());
    mpfr_sqrt(r.lo_, x.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi(), MPFR_RNDU);
    return r;
}

CertifiedReal log(const CertifiedReal& x)
{
    if (mpfr_sgn(x.lo()) <= 0) {
        throw DomainError("certified log of an enclosure reaching zero");
    }
    CertifiedReal r(x.precision());
    mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
    mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
    return r;
}

CertifiedReal exp(const CertifiedReal& x)
{
    CertifiedReal r(x.precision());
    mpfr_exp(r.lo_, x.lo(), MPFR_RNDD);
    mpfr_exp(r.hi_, x.hi(), MPFR_RNDU);
    return r;
}

CertifiedReal pow(const CertifiedReal& x, const CertifiedReal& y)
{
    return exp(y * log(x));
}

CertifiedReal pow(const CertifiedReal& x, long n)
{
    if (n < 0) {
        return CertifiedReal::from_int(1, x.precision()) / pow(x, -n);
    }
    if (mpfr_sgn(x.lo()) >= 0) {
        CertifiedReal r(x.precision());
        mpfr_pow_si(r.lo_, x.lo(), n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, x.hi(), n, MPFR_RNDU);
        return r;
    }
    CertifiedReal result = CertifiedReal::from_int(1, x.precision());
    for (long i = 0; i < n; ++i) {
        result *= x;
    }
    return result;
}

CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b)
{
    CertifiedReal r(joint(a, b));
    mpfr_min(r.lo_, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi_, a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b)
{
    CertifiedReal r(joint(a, b));
    mpfr_max(r.lo_, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_, a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Tribool less(const CertifiedReal& a, const CertifiedReal& b)
{
    if (mpfr_less_p(a.hi(), b.lo())) {
        return Tribool::yes;
    }
    if (mpfr_greaterequal_p(a.lo(), b.hi())) {
        return Tribool::no;
    }
    return Tribool::unknown;
}

Tribool less_equal(const CertifiedReal& a, const CertifiedReal& b)
{
    if (mpfr_lessequal_p(a.hi(), b.lo())) {
        return Tribool::yes;
    }
    if (mpfr_greater_p(a.lo(), b.hi())) {
        return Tribool::no;
    }
    return Tribool::unknown;
}

std::string to_string(Tribool t)
{
    switch (t) {
    case Tribool::yes:
        return "yes";
    case Tribool::no:
        return "no";
    case Tribool::unknown:
        break;
    }
    return "unknown";
}

} // namespace gpcert::cert
