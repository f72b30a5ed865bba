#pragma once

#include "happy/bigint.hpp"
#include "happy/numerals.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace happy {

// Hard cap on materialized digit strings. Preimages grow roughly like
// N / (b-1)^e digits, which outruns memory after a few height steps.
inline constexpr std::uint64_t kMaxAssembledDigits = 10'000'000;

// Multiset of nonzero base-b digits, stored as digit -> multiplicity.
struct DigitMultiset {
  int base;
  std::map<int, BigInt> counts;

  BigInt power_sum(int exponent) const;
  BigInt size() const;  // total number of digits

  friend bool operator==(const DigitMultiset&, const DigitMultiset&) = default;
};

// Greedy power decomposition: scanning digits from b-1 down to 1, take
// floor(remainder / d^e) copies of digit d. Digit 1 clears whatever is
// left, so the result is exact: power_sum(e) == n. Requires n > 1; zero
// digits and zero multiplicities never appear.
DigitMultiset greedy_decompose(const BigInt& n, const Params& p);

// Smallest integer whose base-b digits are exactly the given multiset:
// ascending order, most-significant first (minimal because every digit is
// nonzero). Throws BudgetExceeded past max_digits total digits.
BigInt assemble_smallest(const DigitMultiset& v,
                         std::uint64_t max_digits = kMaxAssembledDigits);

// assemble_smallest(greedy_decompose(n, p)); one step maps it back to n.
BigInt greedy_preimage(const BigInt& n, const Params& p);

struct HeightSequence {
  Params params;
  std::vector<BigInt> members;  // members[i] has height i + 1

  friend bool operator==(const HeightSequence&, const HeightSequence&) = default;
};

// Repeated greedy preimages starting from a height-1 seed (default: b,
// written (10)_b). Produces target_height members, the last of height
// target_height. Requires target_height > 1 and a happy height-1 seed.
HeightSequence build_height_sequence(const Params& p, int target_height,
                                     const std::optional<BigInt>& seed = std::nullopt);

// Minimal x with one step mapping x to n, for n > 1. Minimizes the digit
// count first, then the ascending digit tuple lexicographically.
BigInt smallest_preimage(const BigInt& n, const Params& p);

}  // namespace happy
