#include "fibercone/numbers.hpp"

#include "fibercone/errors.hpp"

namespace fibercone {

Int binomial(long long n, long long k) {
  if (n < 0 || k < 0 || n < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Overflow("integer out of machine range: " + v.get_str());
  return v.get_si();
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace fibercone
