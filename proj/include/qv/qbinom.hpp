#pragma once

#include "qv/exact.hpp"

namespace qv {

/// Gaussian binomial [n k]_q = prod_{0<=i<k} (q^{n-i}-1)/(q^{k-i}-1).
/// [n 0] = 1; zero when k < 0 or k > n. Pure arithmetic: any integer q >= 2
/// is accepted, prime power or not.
ExactInt gauss_binom(long n, long k, long q);

/// h(n,k,t,x) = [x t] [k-t+1 1]^{x-t} [n-x k-x].
ExactRat h_bound(long n, long k, long t, long x, long q);

/// f(n,k,t) = ([k-t+1 1]^2 - q^{-4}) [n-t-1 k-t-1]^2.
ExactRat f_bound(long n, long k, long t, long q);

/// g(n,k,t) = ([t+2 1]^2 - q^{-4}) [n-t-1 k-t-1]^2.
ExactRat g_bound(long n, long k, long t, long q);

/// h2(n,k,t) = [t+2 1][n-t-1 k-t-1] - q [t+1 1][n-t-2 k-t-2].
ExactInt h2_size(long n, long k, long t, long q);

/// Number of k-subspaces F with T ⊂ F and dim(F ∩ M) = j, for fixed
/// T ⊂ M with dim T = t, dim M = m:
///   [m-t j-t] q^{(m-j)(k-j)} [n-m k-j].
/// This closed form is validated against brute-force enumeration in the
/// test suite before anything downstream relies on it.
ExactInt profile_count(long n, long k, long t, long m, long j, long q);

/// |H1(L,M,T)| via the intersection-profile sum (m = k+1):
///   sum_{j=t+1..k} profile_count(n,k,t,k+1,j,q) + [k+1 k] - [k+1-t k-t].
ExactInt h1_size(long n, long k, long t, long q);

} // namespace qv
