#pragma once

#include "happy/bigint.hpp"
#include "happy/numerals.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace happy {

struct TreeNode {
  std::int64_t value;
  int level;                           // distance from the root / cycle
  std::int64_t parent;                 // -1 for the root and cycle members
  int edge_label;                      // 1-based sibling rank, 0 at the root
  std::vector<std::int64_t> children;  // strictly ascending

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// The happy numbers below b^max_digits as a tree rooted at 1: the parent of
// n is one application of the map, children are listed ascending, and each
// edge carries the child's 1-based sibling rank.
struct HappyTree {
  Params params;
  int max_digits;
  std::vector<TreeNode> nodes;  // breadth-first: by level, then by value
  std::unordered_map<std::int64_t, std::size_t> index;

  const TreeNode* find(std::int64_t value) const;
  const TreeNode& root() const { return nodes.front(); }
  std::size_t size() const { return nodes.size(); }
  int depth() const;

  friend bool operator==(const HappyTree&, const HappyTree&) = default;
};

// All x < b^max_digits with step(x) = m and x != m, ascending. Built by
// choosing digit multiplicities and then placements, never by scanning
// all b^max_digits candidates.
std::vector<std::int64_t> enumerate_children(std::int64_t m, const Params& p, int max_digits,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

// |{x < b^max_digits : step(x) = m}| evaluated combinatorially, m >= 1.
// Counts x = m itself when m is a fixed point (notably m = 1), unlike
// enumerate_children.
BigInt count_children_general(const BigInt& m, const Params& p, int max_digits);

// Base 3, e = 2: sum over the number j of twos, C(k,j) * C(k-j, m-4j).
// Requires m > 3.
BigInt count_children_ternary_sq(const BigInt& m, int max_digits);

// Base 3 for general e >= 2: each two contributes 2^e. Requires m > 3.
BigInt count_children_ternary_gen(const BigInt& m, int exponent, int max_digits);

// Requires e >= 2 so the tree is finite at every truncation.
HappyTree build_tree(const Params& p, int max_digits,
                     std::uint64_t budget = kDefaultEnumerationBudget);

// Rank of x among all preimages of step(x) with at most as many digits as
// x, i.e. the edge label x would carry in any truncation containing it.
// Requires x > 1.
std::int64_t edge_label(const BigInt& x, const Params& p,
                        std::uint64_t budget = kDefaultEnumerationBudget);

// Edge labels along the root-to-n path, root side first.
struct Address {
  std::vector<std::int64_t> labels;
  std::int64_t value;  // sum of the labels

  friend bool operator==(const Address&, const Address&) = default;
};

// Requires n happy under p; produces height(n) labels.
Address address(const BigInt& n, const Params& p,
                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace happy
