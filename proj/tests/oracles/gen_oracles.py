"""Independent reference values for the unit tests.

Computed with sympy / mpmath / fractions only; the output header is
checked in so the C++ tests do not need Python at build time.
Run: python3 gen_oracles.py > ../unit/oracle_values.hpp
"""
from fractions import Fraction
from math import gcd, floor, ceil, comb, factorial
import cmath

import mpmath as mp
import sympy as sp

mp.mp.dps = 60
out = []


def emit(line=""):
    out.append(line)


def cstr(x, digits=30):
    return mp.nstr(mp.mpf(x), digits, min_fixed=-1, max_fixed=-1)


emit("#pragma once")
emit("")
emit("// Generated by tests/oracles/gen_oracles.py; do not edit by hand.")
emit("")
emit("#include <cstdint>")
emit("")
emit("namespace oracle {")
emit("")

# least primitive roots
primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
          191, 409, 577, 1009, 7489, 65537, 1000003, 998244353, 1000000007, 2147483647,
          1000000000000000003]
emit("struct LeastRoot { std::uint64_t p; std::uint64_t g; };")
emit("inline constexpr LeastRoot kLeastRoots[] = {")
for p in primes:
    emit(f"    {{{p}ULL, {sp.primitive_root(p)}ULL}},")
emit("};")
emit("")

# factorizations
emit("struct FactorRow { const char* n; const char* factors; };")
emit("inline constexpr FactorRow kFactorizations[] = {")
for n in [2**64 - 59 - 1, 2**61 - 2, 10**18 + 8, 600851475143, 2**89 - 2, 3 * 10**24]:
    f = sp.factorint(n)
    s = " ".join(f"{q}^{e}" for q, e in sorted(f.items()))
    emit(f'    {{"{n}", "{s}"}},')
emit("};")
emit("")

emit("struct PhiMu { std::uint64_t n; std::uint64_t phi; int mu; };")
emit("inline constexpr PhiMu kPhiMu[] = {")
for n in [1, 2, 12, 30, 97, 360, 1001, 9699690, 123456789, 2**40]:
    emit(f"    {{{n}ULL, {sp.totient(n)}ULL, {sp.mobius(n)}}},")
emit("};")
emit("")

emit(f'inline constexpr const char* kPrimorial17 = "{sp.primorial(17)}";')
emit(f"inline constexpr int kPrimorial201Digits = {len(str(sp.primorial(201)))};")
emit(f"inline constexpr int kPrimorial351Digits = {len(str(sp.primorial(351)))};")
emit(f"inline constexpr std::uint64_t kThirteenTimes2Pow32 = {13 * 2**32}ULL;")
emit("")

# Ramanujan sums c_d(k)
def ramanujan(d, k):
    return sum(mp.cos(2 * mp.pi * a * k / d) for a in range(1, d + 1) if gcd(a, d) == 1)

emit("struct RamanujanRow { std::uint64_t d; std::uint64_t k; long value; };")
emit("inline constexpr RamanujanRow kRamanujan[] = {")
for d, k in [(1, 0), (2, 1), (6, 1), (6, 2), (6, 3), (12, 4), (30, 5), (30, 0), (36, 9), (210, 35)]:
    v = int(mp.nint(ramanujan(d, k)))
    emit(f"    {{{d}, {k}, {v}}},")
emit("};")
emit("")


# exact window moments, computed with mpmath complex arithmetic
def moment(p, j, h, r):
    g = sp.primitive_root(p)
    dlog = {}
    x = 1
    for k in range(p - 1):
        dlog[x] = k
        x = x * g % p
    def chi(n):
        n %= p
        if n == 0:
            return mp.mpc(0)
        return mp.exp(2j * mp.pi * j * dlog[n] / (p - 1))
    total = mp.mpf(0)
    for x in range(p):
        s = sum(chi(x + n) for n in range(h))
        total += abs(s) ** (2 * r)
    return total

emit("struct MomentRow { std::uint64_t p; std::uint64_t j; std::uint64_t h; unsigned r; double value; };")
emit("inline constexpr MomentRow kMoments[] = {")
for p, j, h, r in [(11, 1, 3, 2), (11, 5, 4, 1), (13, 6, 5, 3), (17, 4, 2, 4), (31, 7, 6, 2), (101, 50, 8, 2),
                   (101, 3, 7, 3)]:
    emit(f"    {{{p}, {j}, {h}, {r}, {cstr(moment(p, j, h, r), 20)}}},")
emit("};")
emit("")

# Weil-type bounds
emit("struct WeilRow { double p; double h; unsigned r; double general; };")
emit("inline constexpr WeilRow kWeil[] = {")
for p, h, r in [(101, 5, 2), (499, 8, 4), (10007, 20, 3), (1e9, 200, 2)]:
    v = mp.mpf(factorial(2 * r)) / (2**r * factorial(r)) * p * h**r + (2 * r - 1) * mp.sqrt(p) * h**(2 * r)
    emit(f"    {{{p}, {h}, {r}, {cstr(v, 20)}}},")
emit("};")
# Trevino's exceptional-tuple count, summed exactly
def exceptions(r, h, n):
    total = Fraction(0)
    d = 0
    while n * d <= r:
        coef = Fraction(factorial(r), factorial(d) * factorial(n)**d)
        total += coef**2 * Fraction(h)**(r - (n - 2) * d) / factorial(r - n * d)
        d += 1
    return total

emit("struct ExceptionRow { unsigned r; std::uint64_t h; unsigned n; double count; };")
emit("inline constexpr ExceptionRow kExceptions[] = {")
for r, h, n in [(2, 5, 2), (2, 5, 3), (4, 7, 2), (4, 7, 3), (6, 10, 3), (3, 100, 2), (8, 3, 4)]:
    v = exceptions(r, h, n)
    emit(f"    {{{r}, {h}, {n}, {cstr(mp.mpf(v.numerator) / v.denominator, 20)}}},")
emit("};")
emit("")

# S(X), T(X)
def sum_S(X):
    X = Fraction(X)
    q = floor(X)
    return X * sum(Fraction(sp.totient(k), k) for k in range(1, q + 1)) - sum(sp.totient(k) for k in range(1, q + 1))

def sum_T(X):
    return sum(sp.totient(k) for k in range(1, floor(X) + 1))

emit("struct SRow { long num; long den; const char* S; long T; };")
emit("inline constexpr SRow kSumST[] = {")
for num, den in [(1, 1), (5, 2), (38, 1), (75, 2), (100, 1), (999, 1)]:
    s = sum_S(Fraction(num, den))
    emit(f'    {{{num}, {den}, "{s.numerator}/{s.denominator}", {sum_T(Fraction(num, den))}}},')
emit("};")
emit("")

# N(X) by brute force over z in [-H, p-H)
def count_points(p, H, h):
    X = H / h
    segs = []
    for q in range(1, floor(X) + 1):
        for t in range(q):
            if gcd(t, q) != 1:
                continue
            segs.append(("oc", Fraction(t * p, q), Fraction(t * p + H, q) - (h - 1)))
            segs.append(("co", Fraction(t * p - H, q), Fraction(t * p, q) - (h - 1)))
    n = 0
    for kind, lo, hi in segs:
        if kind == "oc":
            n += max(0, floor(hi) - floor(lo))
        else:
            n += max(0, ceil(hi) - ceil(lo))
    return n

emit("struct CountRow { std::uint64_t p; long H_num; long H_den; std::uint64_t h; long N; };")
emit("inline constexpr CountRow kCounts[] = {")
for p, H, h in [(10007, Fraction(100), 10), (10007, Fraction(45), 5), (100003, Fraction(1000), 40),
                (1000003, Fraction(251, 2), 5), (101, Fraction(6), 2)]:
    if 2 * H * (H / h) >= p:
        continue
    emit(f"    {{{p}, {H.numerator}, {H.denominator}, {h}, {count_points(p, H, h)}}},")
emit("};")
emit("")

# sieve deltas and factors
q = list(sp.primerange(2, 2000))
def F(omega, s, delta):
    return (2 + Fraction(s - 1) / delta) * 2**(omega - s)

d_literal_12_9 = 1 - sum(Fraction(1, q[i - 1]) for i in range(3, 13))
d_tight_17_14 = 1 - sum(Fraction(1, q[i - 1]) for i in range(4, 18))
emit(f'inline constexpr const char* kDeltaLiteral_12_9 = "{d_literal_12_9.numerator}/{d_literal_12_9.denominator}";')
f = F(12, 9, d_literal_12_9)
emit(f'inline constexpr const char* kFactor_12_9 = "{f.numerator}/{f.denominator}";')
emit(f'inline constexpr const char* kDeltaTight_17_14 = "{d_tight_17_14.numerator}/{d_tight_17_14.denominator}";')
lhs17 = 13 * F(17, 14, d_tight_17_14) ** 4
emit(f"inline constexpr double kCor2Omega17Lhs = {cstr(mp.mpf(lhs17.numerator) / lhs17.denominator, 20)};")
emit("")

# steps s -> s+1 (dropping the largest remaining prime) that raise F, p < 20000
steps = raised = 0
for p in sp.primerange(3, 20000):
    qs = sorted(sp.factorint(p - 1))
    w = len(qs)
    prev = None
    for s_ in range(w):
        d = 1 - sum(Fraction(1, q) for q in qs[w - s_:])
        if d <= 0:
            break
        f = F(w, s_, d) if s_ > 0 else Fraction(2**w)
        if prev is not None:
            steps += 1
            raised += f > prev
        prev = f
emit(f"inline constexpr int kFactorSteps = {steps};")
emit(f"inline constexpr int kFactorStepsRaised = {raised};")
emit("")

# reduced constants of the two corollaries
def shape_constant(P0, cH, a, ch, b, gamma):
    P0 = mp.mpf(P0)
    h_lo = ch * P0**b
    X = cH * P0**a / (h_lo + 1)
    k = 2 * mp.pi**2 / (9 * X)
    A = 1 - k
    B = 1 + k + 1 / h_lo + mp.pi**2 / (3 * h_lo) * mp.log(X) / X
    r = 2
    e1 = b * (1 - r) + 1 - 2 * a + gamma
    e2 = b + mp.mpf(1) / 2 - 2 * a + gamma
    e3 = mp.mpf(1) / 2 - 2 * a + gamma
    e4 = 1 - b - 2 * a + gamma
    general = (mp.sqrt(2) * (2 * r / mp.e) ** r * ch ** (1 - r) * P0**e1 + (2 * r - 1) * ch * P0**e2
               + (2 * r - 1) * P0**e3) / cH**2
    r2 = (3 * ch * P0**e2 + 3 * P0**e3 + 3 * P0**e4 / ch) / cH**2
    W = min(general, r2)
    return mp.pi**2 / 6 * B**3 / A**4 * W, X, A, B

K2, X2, A2, B2 = shape_constant(10**20, 1, mp.mpf(5) / 8, 2, mp.mpf(1) / 4, mp.mpf(1) / 2)
K3, _, _, _ = shape_constant(10**56, mp.mpf(999) / 1000, mp.mpf(1) / 2, 1, mp.mpf(1) / 4, mp.mpf(1) / 4)
emit(f"inline constexpr double kCor2Constant = {cstr(K2, 17)};")
emit(f"inline constexpr double kCor2X = {cstr(X2, 17)};")
emit(f"inline constexpr double kLonelyConstant = {cstr(K3, 17)};")
emit("")

# bounds at p = 1e56
emit(f"inline constexpr double kThm1_1e56_r2_w10 = {cstr(4 * 2**20 * mp.mpf(10)**21, 20)};")
emit(f"inline constexpr double kBurgessRatio_1e56_r2 = {cstr(4 / (mp.mpf('12.8530') * mp.sqrt(mp.log(mp.mpf(10)**56))), 20)};")
emit("")

# win chain pieces at r = 2
r = 2
kappa = mp.sqrt(2) * (r - 1) / (2 * r - 1)
c_h = 2 * r / mp.e * kappa ** (mp.mpf(1) / r)
twelve = (mp.pi**2 / 6 * mp.mpf('1.145')**2 / mp.mpf('0.998')**2 * 2 / mp.e * mp.mpf('1.031')
          * mp.mpf(2) ** (mp.mpf(1) / (2 * r)) * ((2 * r - mp.mpf(1)) / (r - 1)) ** (1 - mp.mpf(1) / r))
twelve2 = twelve * (mp.mpf('1.158') / mp.mpf('1.145'))**2 * (mp.mpf('0.998') / mp.mpf('0.992'))**2
emit(f"inline constexpr double kWinCh_r2 = {cstr(c_h, 17)};")
emit(f"inline constexpr double kWinH_1e15_r2 = {cstr(mp.ceil(c_h * mp.mpf(10)**(mp.mpf(15) / 4)), 17)};")
emit(f"inline constexpr double kTwelve_r2 = {cstr(twelve, 17)};")
emit(f"inline constexpr double kTwelveSieved_r2 = {cstr(twelve2, 17)};")
emit("")

emit("inline constexpr double kDoubleFactorial[] = {")
for r in range(1, 11):
    emit(f"    {factorial(2 * r) // (2**r * factorial(r))}.0,")
emit("};")
emit("")
emit("} // namespace oracle")
print("\n".join(out))
