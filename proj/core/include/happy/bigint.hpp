#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace happy {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when an operation would enumerate or materialize past its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cap on b^k (and on the cycle-census bound) for enumerating operations.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// base^exp over exact integers, exp >= 0.
BigInt int_pow(const BigInt& base, std::int64_t exp);

// Binomial coefficient; zero whenever k < 0 or k > n (which covers n < 0).
BigInt binomial(std::int64_t n, const BigInt& k);

}  // namespace happy
