#include "happy/constructor.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace happy {

BigInt DigitMultiset::power_sum(int exponent) const {
  BigInt total = 0;
  for (const auto& [digit, count] : counts) total += count * int_pow(BigInt(digit), exponent);
  return total;
}

BigInt DigitMultiset::size() const {
  BigInt total = 0;
  for (const auto& [digit, count] : counts) total += count;
  return total;
}

DigitMultiset greedy_decompose(const BigInt& n, const Params& p) {
  if (n <= 1) throw std::invalid_argument("greedy_decompose: n must exceed 1");
  DigitMultiset v{p.base, {}};
  BigInt remainder = n;
  for (int d = p.base - 1; d >= 1; --d) {
    const BigInt power = int_pow(BigInt(d), p.exponent);
    if (power > remainder) continue;
    const BigInt count = remainder / power;
    v.counts.emplace(d, count);
    remainder -= count * power;
  }
  assert(remainder == 0);  // digit 1 always soaks up the rest
  return v;
}

BigInt assemble_smallest(const DigitMultiset& v, std::uint64_t max_digits) {
  if (v.base < 2) throw std::invalid_argument("assemble_smallest: base must be >= 2");
  if (v.counts.empty()) throw std::invalid_argument("assemble_smallest: empty multiset");
  for (const auto& [digit, count] : v.counts) {
    if (digit < 1 || digit >= v.base)
      throw std::invalid_argument("assemble_smallest: digits must lie in [1, base)");
    if (count < 1)
      throw std::invalid_argument("assemble_smallest: multiplicities must be positive");
  }
  if (v.size() > max_digits)
    throw BudgetExceeded("assemble_smallest: result would have " + v.size().str() +
                         " digits (cap " + std::to_string(max_digits) + ")");
  // Ascending digits, most significant first. Whole runs are appended at
  // once: shifting by b^len and adding digit * repunit keeps the cost tied
  // to the number of distinct digits, not the digit count.
  BigInt value = 0;
  for (const auto& [digit, count] : v.counts) {
    const std::int64_t len = count.convert_to<std::int64_t>();
    const BigInt shift = int_pow(BigInt(v.base), len);
    const BigInt repunit = (shift - 1) / (v.base - 1);
    value = value * shift + digit * repunit;
  }
  return value;
}

BigInt greedy_preimage(const BigInt& n, const Params& p) {
  return assemble_smallest(greedy_decompose(n, p));
}

HeightSequence build_height_sequence(const Params& p, int target_height,
                                     const std::optional<BigInt>& seed) {
  if (target_height <= 1)
    throw std::invalid_argument("build_height_sequence: target height must exceed 1");
  const BigInt start = seed.value_or(BigInt(p.base));
  {
    const OrbitReport check = orbit(start, p);
    if (check.classification != Classification::Happy || check.height != 1)
      throw std::invalid_argument(
          "build_height_sequence: seed must be a happy number of height 1");
  }
  HeightSequence sequence{p, {start}};
  for (int h = 2; h <= target_height; ++h)
    sequence.members.push_back(greedy_preimage(sequence.members.back(), p));
  // each greedy step adds exactly one level, so the final member's full
  // orbit must confirm the target height
  const OrbitReport last = orbit(sequence.members.back(), p);
  if (last.classification != Classification::Happy ||
      last.height != static_cast<std::size_t>(target_height))
    throw std::logic_error("build_height_sequence: height drifted during construction");
  return sequence;
}

namespace {

// Backtracking over nondecreasing digit tuples with a fixed digit budget.
// Trying small digits first makes the first hit the lexicographic minimum,
// which (all digits being nonzero) is also the smallest assembled value.
std::vector<int> search_with_digit_count(const BigInt& n, const BigInt& slots,
                                         const Params& p, const std::vector<BigInt>& powers) {
  const BigInt& top = powers[p.base - 1];
  std::vector<int> chosen;
  BigInt remaining = n;
  BigInt left = slots;
  int candidate = 1;
  for (;;) {
    bool took = false;
    for (int d = candidate; d < p.base; ++d) {
      BigInt rest = remaining - powers[d];
      if (rest < 0) break;
      const BigInt future = left - 1;
      if (rest > future * top) continue;    // d too small to ever finish
      if (rest < future * powers[d]) break; // d (and everything above) too big
      chosen.push_back(d);
      remaining = std::move(rest);
      left = future;
      candidate = d;
      took = true;
      break;
    }
    if (took) {
      if (left == 0) return chosen;  // bounds force remaining == 0 here
      continue;
    }
    if (chosen.empty()) return {};
    const int undone = chosen.back();
    chosen.pop_back();
    remaining += powers[undone];
    ++left;
    candidate = undone + 1;
  }
}

}  // namespace

BigInt smallest_preimage(const BigInt& n, const Params& p) {
  if (n <= 1) throw std::invalid_argument("smallest_preimage: n must exceed 1");
  std::vector<BigInt> powers(p.base);
  for (int d = 0; d < p.base; ++d) powers[d] = int_pow(BigInt(d), p.exponent);
  const BigInt& top = powers[p.base - 1];
  // fewer digits always means a smaller value, so scan digit counts upward;
  // the all-ones tuple guarantees a hit at n digits at the latest
  for (BigInt count = (n + top - 1) / top;; ++count) {
    if (count > kMaxAssembledDigits)
      throw BudgetExceeded("smallest_preimage: needs more than " +
                           std::to_string(kMaxAssembledDigits) + " digits");
    const std::vector<int> digits = search_with_digit_count(n, count, p, powers);
    if (digits.empty()) continue;
    DigitMultiset v{p.base, {}};
    for (int d : digits) ++v.counts[d];
    return assemble_smallest(v);
  }
}

}  // namespace happy
