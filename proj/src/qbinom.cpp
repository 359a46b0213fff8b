#include "qv/qbinom.hpp"

#include "qv/errors.hpp"

namespace qv {

ExactInt gauss_binom(long n, long k, long q) {
    if (q < 2) throw PreconditionViolated("gauss_binom requires q >= 2");
    if (n < 0) throw PreconditionViolated("gauss_binom requires n >= 0");
    if (k < 0 || k > n) return 0;
    ExactInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= pow_int(ExactInt(q), n - i) - 1;
        den *= pow_int(ExactInt(q), k - i) - 1;
    }
    return num / den; // exact: the product formula is integer-valued
}

ExactRat h_bound(long n, long k, long t, long x, long q) {
    if (t < 1 || x < t || k < t)
        throw PreconditionViolated("h_bound requires 1 <= t <= x and k >= t");
    ExactRat r(gauss_binom(x, t, q));
    r *= ExactRat(pow_int(ExactInt(gauss_binom(k - t + 1, 1, q)), x - t));
    r *= ExactRat(gauss_binom(n - x, k - x, q));
    return r;
}

namespace {

ExactRat fg_common(long n, long k, long t, long q, const ExactInt& first) {
    ExactRat lead = ExactRat(first * first) - pow_rat(q, -4);
    ExactInt tail = gauss_binom(n - t - 1, k - t - 1, q);
    return lead * ExactRat(tail * tail);
}

} // namespace

ExactRat f_bound(long n, long k, long t, long q) {
    if (k < t + 1 || t < 1)
        throw PreconditionViolated("f_bound requires k >= t+1 >= 2");
    return fg_common(n, k, t, q, gauss_binom(k - t + 1, 1, q));
}

ExactRat g_bound(long n, long k, long t, long q) {
    if (k < t + 1 || t < 1)
        throw PreconditionViolated("g_bound requires k >= t+1 >= 2");
    return fg_common(n, k, t, q, gauss_binom(t + 2, 1, q));
}

ExactInt h2_size(long n, long k, long t, long q) {
    if (k < t + 1) throw PreconditionViolated("h2_size requires k >= t+1");
    return gauss_binom(t + 2, 1, q) * gauss_binom(n - t - 1, k - t - 1, q) -
           q * gauss_binom(t + 1, 1, q) * gauss_binom(n - t - 2, k - t - 2, q);
}

ExactInt profile_count(long n, long k, long t, long m, long j, long q) {
    if (j < t || j > m || j > k) return 0;
    return gauss_binom(m - t, j - t, q) *
           pow_int(ExactInt(q), (m - j) * (k - j)) * gauss_binom(n - m, k - j, q);
}

ExactInt h1_size(long n, long k, long t, long q) {
    if (k < t + 1 || n < k + 1)
        throw PreconditionViolated("h1_size requires k >= t+1 and n >= k+1");
    ExactInt total = 0;
    for (long j = t + 1; j <= k; ++j) total += profile_count(n, k, t, k + 1, j, q);
    total += gauss_binom(k + 1, k, q) - gauss_binom(k + 1 - t, k - t, q);
    return total;
}

} // namespace qv
