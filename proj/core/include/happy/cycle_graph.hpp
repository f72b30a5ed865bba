#pragma once

#include "happy/bigint.hpp"
#include "happy/happy_tree.hpp"
#include "happy/numerals.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace happy {

// The unhappy numbers below b^max_digits that fall into one particular
// cycle: the cycle itself plus a preimage tree hanging off every cycle
// member. Cycle members sit at level 0 with parent -1; everywhere else the
// parent is one application of the map.
struct CycleGraph {
  Params params;
  int max_digits;
  Cycle cycle;
  std::vector<TreeNode> nodes;  // cycle members in cycle order, then by level/value
  std::unordered_map<std::int64_t, std::size_t> index;

  const TreeNode* find(std::int64_t value) const;
  std::size_t size() const { return nodes.size(); }
  int depth() const;

  friend bool operator==(const CycleGraph&, const CycleGraph&) = default;
};

// cycle must be a genuine cycle of the map other than {1}, every member
// below b^max_digits; any rotation is accepted. A cycle member's in-cycle
// predecessor is not listed among its children, so the only directed cycle
// in the graph is the cycle itself.
CycleGraph build_cycle_graph(const Params& p, int max_digits, const Cycle& cycle,
                             std::uint64_t budget = kDefaultEnumerationBudget);

// One-parameter family of fixed points for e = 2: the two-digit number
// with x1 = t, x0 = l*t + 1 in base b = (l^2 + 1)*t + l satisfies
// x1^2 + x0^2 = x1*b + x0. Requires t >= 1, l >= 1.
struct FixedPointFamily {
  BigInt t;
  BigInt ell;
  BigInt base;
  BigInt x1, x0;
  BigInt value;  // X = x1*b + x0

  friend bool operator==(const FixedPointFamily&, const FixedPointFamily&) = default;
};

FixedPointFamily fixed_point_family(const BigInt& t, const BigInt& ell);

// Two-cycles for e = 2 in bases b = 5t + 3, t >= 0: X = (t, 3t+2)_b and
// Y = (2t+1, t+1)_b swap under the map, and Y = 2X.
struct TwoCycleFamily {
  BigInt t;
  BigInt base;
  BigInt x1, x0, y1, y0;
  BigInt x, y;

  friend bool operator==(const TwoCycleFamily&, const TwoCycleFamily&) = default;
};

TwoCycleFamily two_cycle_family(const BigInt& t);

// find_all_cycles filtered down to cycles with exactly length members.
std::vector<Cycle> search_cycles_of_length(const Params& p, std::size_t length,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace happy
