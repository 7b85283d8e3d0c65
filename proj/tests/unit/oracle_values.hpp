#pragma once

// Generated by tests/oracles/gen_oracles.py; do not edit by hand.

#include <cstdint>

namespace oracle {

struct LeastRoot { std::uint64_t p; std::uint64_t g; };
inline constexpr LeastRoot kLeastRoots[] = {
    {3ULL, 2ULL},
    {5ULL, 2ULL},
    {7ULL, 3ULL},
    {11ULL, 2ULL},
    {13ULL, 2ULL},
    {17ULL, 3ULL},
    {19ULL, 2ULL},
    {23ULL, 5ULL},
    {29ULL, 2ULL},
    {31ULL, 3ULL},
    {37ULL, 2ULL},
    {41ULL, 6ULL},
    {43ULL, 3ULL},
    {47ULL, 5ULL},
    {53ULL, 2ULL},
    {59ULL, 2ULL},
    {61ULL, 2ULL},
    {67ULL, 2ULL},
    {71ULL, 7ULL},
    {73ULL, 5ULL},
    {79ULL, 3ULL},
    {83ULL, 2ULL},
    {89ULL, 3ULL},
    {97ULL, 5ULL},
    {191ULL, 19ULL},
    {409ULL, 21ULL},
    {577ULL, 5ULL},
    {1009ULL, 11ULL},
    {7489ULL, 7ULL},
    {65537ULL, 3ULL},
    {1000003ULL, 2ULL},
    {998244353ULL, 3ULL},
    {1000000007ULL, 5ULL},
    {2147483647ULL, 7ULL},
    {1000000000000000003ULL, 2ULL},
};

struct FactorRow { const char* n; const char* factors; };
inline constexpr FactorRow kFactorizations[] = {
    {"18446744073709551556", "2^2 11^1 137^1 547^1 5594472617641^1"},
    {"2305843009213693950", "2^1 3^2 5^2 7^1 11^1 13^1 31^1 41^1 61^1 151^1 331^1 1321^1"},
    {"1000000000000000008", "2^3 3^2 97^1 26209^1 32779^1 166667^1"},
    {"600851475143", "71^1 839^1 1471^1 6857^1"},
    {"618970019642690137449562110", "2^1 3^1 5^1 17^1 23^1 89^1 353^1 397^1 683^1 2113^1 2931542417^1"},
    {"3000000000000000000000000", "2^24 3^1 5^24"},
};

struct PhiMu { std::uint64_t n; std::uint64_t phi; int mu; };
inline constexpr PhiMu kPhiMu[] = {
    {1ULL, 1ULL, 1},
    {2ULL, 1ULL, -1},
    {12ULL, 4ULL, 0},
    {30ULL, 8ULL, -1},
    {97ULL, 96ULL, -1},
    {360ULL, 96ULL, 0},
    {1001ULL, 720ULL, -1},
    {9699690ULL, 1658880ULL, 1},
    {123456789ULL, 82260072ULL, 0},
    {1099511627776ULL, 549755813888ULL, 0},
};

inline constexpr const char* kPrimorial17 = "1922760350154212639070";
inline constexpr int kPrimorial201Digits = 516;
inline constexpr int kPrimorial351Digits = 1003;
inline constexpr std::uint64_t kThirteenTimes2Pow32 = 55834574848ULL;

struct RamanujanRow { std::uint64_t d; std::uint64_t k; long value; };
inline constexpr RamanujanRow kRamanujan[] = {
    {1, 0, 1},
    {2, 1, -1},
    {6, 1, 1},
    {6, 2, -1},
    {6, 3, -2},
    {12, 4, -2},
    {30, 5, 4},
    {30, 0, 8},
    {36, 9, 0},
    {210, 35, 24},
};

struct MomentRow { std::uint64_t p; std::uint64_t j; std::uint64_t h; unsigned r; double value; };
inline constexpr MomentRow kMoments[] = {
    {11, 1, 3, 2, 8.2472135954999579393e+1},
    {11, 5, 4, 1, 2.8e+1},
    {13, 6, 5, 3, 1.72e+3},
    {17, 4, 2, 4, 8.98e+2},
    {31, 7, 6, 2, 1.3767469120380737688e+3},
    {101, 50, 8, 2, 1.572e+4},
    {101, 3, 7, 3, 1.2959346313945450806e+5},
};

struct WeilRow { double p; double h; unsigned r; double general; };
inline constexpr WeilRow kWeil[] = {
    {101, 5, 2, 2.6418516789601669257e+4},
    {499, 8, 4, 2.8380322374228448757e+9},
    {10007, 20, 3, 3.3212038040685700022e+10},
    {1000000000.0, 200, 2, 2.7178932768808220794e+14},
};
struct ExceptionRow { unsigned r; std::uint64_t h; unsigned n; double count; };
inline constexpr ExceptionRow kExceptions[] = {
    {2, 5, 2, 7.5e+1},
    {2, 5, 3, 5.0e+1},
    {4, 7, 2, 2.52105e+5},
    {4, 7, 3, 6.3112e+4},
    {6, 10, 3, 9.61e+8},
    {3, 100, 2, 1.5e+7},
    {8, 3, 4, 3.50369145e+8},
};

struct SRow { long num; long den; const char* S; long T; };
inline constexpr SRow kSumST[] = {
    {1, 1, "0/1", 1},
    {5, 2, "7/4", 2},
    {38, 1, "28559634731437/65094194165", 450},
    {75, 2, "422770382595699/989431751308", 432},
    {100, 1, "233574645794929794366751200288890239344/76852265464850614158436738244391869", 3044},
    {999, 1, "345413467587954299328709897556165700874114983322171360731772434151572056507831312219567964633992637773003861477317058802273518721821481428482348255204459420497731378311875362264782596143873786334644232466089409841949855813552576219924182544680588975648145398187850301642019253182910134115846816290641874127804089235039376771724365095057637112527053090659623206938185602711155016023998788384833623990519674513131827193/1138642292647432922479657552932658009074337250252215531757198798545112834430681235794940520127258490066621886609441210063887795973566711230938232083164931649134712664481488982222726588681278328099940219921952730117538123223895293009454294282777825565183953205007683133314728095038502732888050216105487099665817286085790981492976500060401105006446841036902324618727306001135889915323142680314171373093901842946302", 303792},
};

struct CountRow { std::uint64_t p; long H_num; long H_den; std::uint64_t h; long N; };
inline constexpr CountRow kCounts[] = {
    {10007, 100, 1, 10, 670},
    {10007, 45, 1, 5, 304},
    {100003, 1000, 1, 40, 15588},
    {1000003, 251, 2, 5, 2316},
    {101, 6, 1, 2, 18},
};

inline constexpr const char* kDeltaLiteral_12_9 = "297583311503/1236789689135";
inline constexpr const char* kFactor_12_9 = "83915873088688/297583311503";
inline constexpr const char* kDeltaTight_17_14 = "21526567248016697619/64092011671807087969";
inline constexpr double kCor2Omega17Lhs = 1.4618906494008811956e+11;

inline constexpr int kFactorSteps = 4776;
inline constexpr int kFactorStepsRaised = 163;

inline constexpr double kCor2Constant = 1.2337251886160802e+1;
inline constexpr double kCor2X = 1.5811309244295675e+7;
inline constexpr double kLonelyConstant = 9.8893732582344315;

inline constexpr double kThm1_1e56_r2_w10 = 4.194304e+27;
inline constexpr double kBurgessRatio_1e56_r2 = 2.7406503109124748175e-2;

inline constexpr double kWinCh_r2 = 1.0103279811251311;
inline constexpr double kWinH_1e15_r2 = 5.682e+3;
inline constexpr double kTwelve_r2 = 3.3830677185092514;
inline constexpr double kTwelveSieved_r2 = 3.5023099245060894;

inline constexpr double kDoubleFactorial[] = {
    1.0,
    3.0,
    15.0,
    105.0,
    945.0,
    10395.0,
    135135.0,
    2027025.0,
    34459425.0,
    654729075.0,
};

} // namespace oracle
