#pragma once

#include <cstdint>
#include <cstring>

// Branch-free exp/log kernels. The moment kernel spends nearly all of its
// time in powers of the form (b + k*h)^(-e); these evaluate exp and log a
// few times faster than libm at ~1e-13 relative accuracy, and the loops
// they sit in auto-vectorize.
namespace admission::fastmath {

// valid for |x| <= ~700; callers stay far inside that range
inline double fast_exp(double x) {
    const double LOG2E = 1.4426950408889634074;
    const double LN2HI = 6.93147180369123816490e-01;
    const double LN2LO = 1.90821492927058770002e-10;
    const double RND = 6755399441055744.0;  // 1.5 * 2^52, round-to-nearest trick
    double nf = x * LOG2E + RND;
    std::int64_t n;
    std::memcpy(&n, &nf, 8);
    n = (n << 13) >> 13;
    nf -= RND;
    double r = x - nf * LN2HI;
    r -= nf * LN2LO;
    const double c2 = 0.5, c3 = 1.0 / 6, c4 = 1.0 / 24, c5 = 1.0 / 120,
                 c6 = 1.0 / 720, c7 = 1.0 / 5040, c8 = 1.0 / 40320,
                 c9 = 1.0 / 362880, c10 = 1.0 / 3628800;
    double r2 = r * r;
    double r4 = r2 * r2;
    double r8 = r4 * r4;
    double q0 = (1.0 + r) + (c2 + c3 * r) * r2;
    double q1 = (c4 + c5 * r) + (c6 + c7 * r) * r2;
    double q2 = (c8 + c9 * r) + c10 * r2;
    double p = q0 + r4 * q1 + r8 * q2;
    std::uint64_t bits;
    std::memcpy(&bits, &p, 8);
    bits += static_cast<std::uint64_t>(n) << 52;
    std::memcpy(&p, &bits, 8);
    return p;
}

// valid for finite x > 0
inline double fast_log(double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, 8);
    std::uint64_t mant = bits & 0xfffffffffffffULL;
    // pick mantissa in [sqrt(1/2), sqrt(2)) so the atanh series converges fast
    std::uint64_t big = static_cast<std::uint64_t>(mant > 0x6A09E667F3BCCULL);
    std::int64_t e = static_cast<std::int64_t>((bits >> 52) & 0x7ff) - 1023 +
                     static_cast<std::int64_t>(big);
    std::uint64_t mbits = mant | ((1023ULL - big) << 52);
    double m;
    std::memcpy(&m, &mbits, 8);
    double z = (m - 1.0) / (m + 1.0);
    double z2 = z * z;
    double z4 = z2 * z2;
    double z8 = z4 * z4;
    const double c3 = 1.0 / 3, c5 = 1.0 / 5, c7 = 1.0 / 7, c9 = 1.0 / 9,
                 c11 = 1.0 / 11, c13 = 1.0 / 13, c15 = 1.0 / 15;
    double p = ((1.0 + c3 * z2) + z4 * (c5 + c7 * z2)) +
               z8 * ((c9 + c11 * z2) + z4 * (c13 + c15 * z2));
    return 2.0 * z * p + static_cast<double>(e) * 0.69314718055994530942;
}

}  // namespace admission::fastmath
