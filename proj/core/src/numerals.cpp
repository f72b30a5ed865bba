#include "happy/numerals.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

namespace happy {
namespace {

Cycle canonical_cycle(std::vector<BigInt> members) {
  const auto smallest = std::min_element(members.begin(), members.end());
  std::rotate(members.begin(), smallest, members.end());
  return Cycle{std::move(members)};
}

}  // namespace

Params::Params(int exponent, int base) : exponent(exponent), base(base) {
  if (exponent < 1) throw std::invalid_argument("Params: exponent must be >= 1");
  if (base < 2) throw std::invalid_argument("Params: base must be >= 2");
}

Numeral to_digits(const BigInt& value, int base) {
  if (base < 2) throw std::invalid_argument("to_digits: base must be >= 2");
  if (value < 0) throw std::invalid_argument("to_digits: value must be nonnegative");
  Numeral out{value, base, {}};
  if (value == 0) {
    out.digits = {0};
    return out;
  }
  const BigInt divisor = base;
  BigInt rest = value;
  BigInt quotient, remainder;
  while (rest != 0) {
    boost::multiprecision::divide_qr(rest, divisor, quotient, remainder);
    out.digits.push_back(remainder.convert_to<int>());
    rest = quotient;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

BigInt from_digits(const std::vector<int>& digits, int base) {
  if (base < 2) throw std::invalid_argument("from_digits: base must be >= 2");
  if (digits.empty()) throw std::invalid_argument("from_digits: empty digit list");
  BigInt value = 0;
  for (int d : digits) {
    if (d < 0 || d >= base) throw std::invalid_argument("from_digits: digit out of range");
    value = value * base + d;
  }
  return value;
}

BigInt happy_step(const BigInt& n, const Params& p) {
  if (n < 1) throw std::invalid_argument("happy_step: n must be positive");
  const BigInt divisor = p.base;
  BigInt sum = 0;
  BigInt rest = n;
  BigInt quotient, remainder;
  while (rest != 0) {
    boost::multiprecision::divide_qr(rest, divisor, quotient, remainder);
    sum += int_pow(remainder, p.exponent);
    rest = quotient;
  }
  return sum;
}

OrbitReport orbit(const BigInt& n, const Params& p) {
  if (n < 1) throw std::invalid_argument("orbit: n must be positive");
  OrbitReport report{p, n, {}, Classification::Happy, std::nullopt, 0};
  std::map<BigInt, std::size_t> first_seen;
  BigInt x = n;
  for (;;) {
    const auto [at, fresh] = first_seen.emplace(x, report.iterates.size());
    report.iterates.push_back(x);
    if (!fresh) {
      // x closes the loop; everything from its first occurrence on is the cycle
      report.classification = Classification::Unhappy;
      report.height = at->second;
      report.cycle = canonical_cycle({report.iterates.begin() + at->second,
                                      report.iterates.end() - 1});
      return report;
    }
    if (x == 1) {
      report.height = report.iterates.size() - 1;
      return report;
    }
    x = happy_step(x, p);
  }
}

std::size_t height(const BigInt& n, const Params& p) { return orbit(n, p).height; }

int contraction_digit_threshold(const Params& p) {
  const BigInt top = int_pow(BigInt(p.base - 1), p.exponent);
  BigInt power = 1;  // b^(d-1)
  for (int d = 1;; ++d) {
    if (power > d * top) return d;
    power *= p.base;
  }
}

BigInt census_bound(const Params& p) {
  return int_pow(BigInt(p.base), contraction_digit_threshold(p) - 1);
}

bool operator<(const Cycle& lhs, const Cycle& rhs) {
  return std::lexicographical_compare(lhs.members.begin(), lhs.members.end(),
                                      rhs.members.begin(), rhs.members.end());
}

std::vector<Cycle> find_all_cycles(const Params& p, std::uint64_t budget) {
  if (p.exponent < 2)
    throw std::invalid_argument("find_all_cycles: exponent must be >= 2");
  const BigInt bound_big = census_bound(p);
  if (bound_big > budget)
    throw BudgetExceeded("find_all_cycles: census bound " + bound_big.str() +
                         " exceeds budget " + std::to_string(budget));
  const auto bound = bound_big.convert_to<std::uint64_t>();

  // Everything at or below the bound steps to something below the bound, so
  // the walk runs entirely on machine integers.
  std::vector<std::uint64_t> powers(p.base);
  for (int d = 0; d < p.base; ++d)
    powers[d] = int_pow(BigInt(d), p.exponent).convert_to<std::uint64_t>();
  const auto step = [&](std::uint64_t x) {
    std::uint64_t sum = 0;
    while (x != 0) {
      sum += powers[x % p.base];
      x /= p.base;
    }
    return sum;
  };

  constexpr std::uint32_t kUnassigned = 0xFFFFFFFFu;
  constexpr std::uint32_t kOnPath = 0xFFFFFFFEu;
  std::vector<std::uint32_t> cycle_of(bound + 1, kUnassigned);
  std::vector<std::vector<std::uint64_t>> raw_cycles;
  std::vector<std::uint64_t> path;

  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (cycle_of[n] != kUnassigned) continue;
    path.clear();
    std::uint64_t x = n;
    while (cycle_of[x] == kUnassigned) {
      cycle_of[x] = kOnPath;
      path.push_back(x);
      x = step(x);
      assert(x >= 1 && x <= bound);
    }
    std::uint32_t id;
    if (cycle_of[x] == kOnPath) {
      // fresh cycle: it starts where x first appeared on the current path
      const auto entry = std::find(path.begin(), path.end(), x);
      id = static_cast<std::uint32_t>(raw_cycles.size());
      raw_cycles.emplace_back(entry, path.end());
    } else {
      id = cycle_of[x];
    }
    for (std::uint64_t v : path) cycle_of[v] = id;
  }

  std::vector<Cycle> cycles;
  cycles.reserve(raw_cycles.size());
  for (const auto& raw : raw_cycles)
    cycles.push_back(canonical_cycle({raw.begin(), raw.end()}));
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace happy
