#include "happy/bigint.hpp"

#include <algorithm>

namespace happy {

BigInt int_pow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt result = 1;
  BigInt square = base;
  for (std::int64_t e = exp; e > 0; e >>= 1) {
    if (e & 1) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

BigInt binomial(std::int64_t n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  const std::int64_t kk = k.convert_to<std::int64_t>();
  const std::int64_t reduced = std::min(kk, n - kk);
  BigInt result = 1;
  // after pass i the value is C(n - reduced + i, i), so the division is exact
  for (std::int64_t i = 1; i <= reduced; ++i) {
    result *= n - reduced + i;
    result /= i;
  }
  return result;
}

}  // namespace happy
