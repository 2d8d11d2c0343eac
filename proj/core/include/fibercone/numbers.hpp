#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fibercone {

// Exact integer / rational scalars. All lengths, multiplicities and series
// coefficients are Int; the elimination engine works over Rat.
using Int = mpz_class;
using Rat = mpq_class;

// Binomial coefficient with the power-series convention: C(n,k) = 0 whenever
// n < 0, k < 0 or n < k. This is the coefficient of t^(n-k) in 1/(1-t)^(k+1),
// which is the reading every closed form in this library relies on.
Int binomial(long long n, long long k);

// Narrowing conversion; throws Overflow if the value does not fit.
long long to_long(const Int& v);

std::string to_string(const Int& v);

}  // namespace fibercone
