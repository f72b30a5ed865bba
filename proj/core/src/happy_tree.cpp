#include "happy/happy_tree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <utility>

namespace happy {
namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

void check_enumeration_range(const BigInt& bk, std::uint64_t budget, const char* who) {
  if (bk > budget || bk > kInt64Max)
    throw BudgetExceeded(std::string(who) + ": base^max_digits " + bk.str() +
                         " exceeds budget " + std::to_string(budget));
}

// Walks digit multiplicities from the top digit down; digit 1 absorbs the
// remaining shortfall exactly, so only digits >= 2 branch.
class ChildGenerator {
 public:
  ChildGenerator(std::int64_t m, const Params& p, int max_digits)
      : m_(m), p_(p), max_digits_(max_digits), powers_(p.base), multiplicity_(p.base, 0) {
    for (int d = 0; d < p.base; ++d) powers_[d] = int_pow(BigInt(d), p.exponent);
  }

  std::vector<std::int64_t> generate() {
    result_.clear();
    choose(p_.base - 1, m_, 0);
    std::sort(result_.begin(), result_.end());
    return std::move(result_);
  }

 private:
  void choose(int digit, const BigInt& shortfall, std::int64_t used) {
    if (digit == 1) {
      if (shortfall > max_digits_ - used) return;
      multiplicity_[1] = shortfall.convert_to<std::int64_t>();
      place();
      multiplicity_[1] = 0;
      return;
    }
    BigInt cap = shortfall / powers_[digit];
    if (cap > max_digits_ - used) cap = max_digits_ - used;
    const auto cap_i = cap.convert_to<std::int64_t>();
    for (std::int64_t j = 0; j <= cap_i; ++j) {
      multiplicity_[digit] = j;
      choose(digit - 1, shortfall - j * powers_[digit], used + j);
    }
    multiplicity_[digit] = 0;
  }

  // Emit every arrangement of the chosen multiset over max_digits_ slots
  // (missing slots are zeros); next_permutation visits each distinct
  // placement exactly once.
  void place() {
    scatter_.clear();
    for (int d = 1; d < p_.base; ++d)
      scatter_.insert(scatter_.end(), static_cast<std::size_t>(multiplicity_[d]), d);
    scatter_.resize(static_cast<std::size_t>(max_digits_), 0);
    std::sort(scatter_.begin(), scatter_.end());
    do {
      std::int64_t value = 0;
      for (int d : scatter_) value = value * p_.base + d;
      if (value != m_) result_.push_back(value);
    } while (std::next_permutation(scatter_.begin(), scatter_.end()));
  }

  std::int64_t m_;
  Params p_;
  int max_digits_;
  std::vector<BigInt> powers_;
  std::vector<std::int64_t> multiplicity_;
  std::vector<int> scatter_;
  std::vector<std::int64_t> result_;
};

}  // namespace

std::vector<std::int64_t> enumerate_children(std::int64_t m, const Params& p, int max_digits,
                                             std::uint64_t budget) {
  if (m < 1) throw std::invalid_argument("enumerate_children: m must be positive");
  if (max_digits < 1) throw std::invalid_argument("enumerate_children: max_digits must be >= 1");
  check_enumeration_range(int_pow(BigInt(p.base), max_digits), budget, "enumerate_children");
  return ChildGenerator(m, p, max_digits).generate();
}

BigInt count_children_general(const BigInt& m, const Params& p, int max_digits) {
  if (m < 1) throw std::invalid_argument("count_children_general: m must be positive");
  if (max_digits < 1) throw std::invalid_argument("count_children_general: max_digits must be >= 1");
  std::vector<BigInt> powers(p.base);
  for (int d = 0; d < p.base; ++d) powers[d] = int_pow(BigInt(d), p.exponent);
  if (m > max_digits * powers[p.base - 1]) return 0;

  // Nested sums over the multiplicities of digits b-1 down to 2, one
  // binomial per level for the slot choice; the ones fill what remains.
  const auto count = [&](const auto& self, int digit, const BigInt& shortfall,
                         std::int64_t used) -> BigInt {
    if (digit == 1) return binomial(max_digits - used, shortfall);
    BigInt cap = shortfall / powers[digit];
    if (cap > max_digits - used) cap = max_digits - used;
    const auto cap_i = cap.convert_to<std::int64_t>();
    BigInt total = 0;
    for (std::int64_t j = 0; j <= cap_i; ++j)
      total += binomial(max_digits - used, BigInt(j)) *
               self(self, digit - 1, shortfall - j * powers[digit], used + j);
    return total;
  };
  return count(count, p.base - 1, m, 0);
}

BigInt count_children_ternary_sq(const BigInt& m, int max_digits) {
  if (m <= 3) throw std::invalid_argument("count_children_ternary_sq: m must exceed 3");
  if (max_digits < 1) throw std::invalid_argument("count_children_ternary_sq: max_digits must be >= 1");
  // j twos contribute 4j; the remaining m - 4j slots hold ones
  BigInt total = 0;
  for (std::int64_t j = 0; j <= max_digits; ++j) {
    const BigInt rest = m - 4 * j;
    if (rest < 0) break;
    total += binomial(max_digits, BigInt(j)) * binomial(max_digits - j, rest);
  }
  return total;
}

BigInt count_children_ternary_gen(const BigInt& m, int exponent, int max_digits) {
  if (m <= 3) throw std::invalid_argument("count_children_ternary_gen: m must exceed 3");
  if (exponent < 2) throw std::invalid_argument("count_children_ternary_gen: exponent must be >= 2");
  if (max_digits < 1) throw std::invalid_argument("count_children_ternary_gen: max_digits must be >= 1");
  const BigInt two_power = int_pow(BigInt(2), exponent);
  BigInt total = 0;
  for (std::int64_t j = 0; j <= max_digits; ++j) {
    const BigInt rest = m - j * two_power;
    if (rest < 0) break;
    total += binomial(max_digits, BigInt(j)) * binomial(max_digits - j, rest);
  }
  return total;
}

const TreeNode* HappyTree::find(std::int64_t value) const {
  const auto at = index.find(value);
  return at == index.end() ? nullptr : &nodes[at->second];
}

int HappyTree::depth() const {
  int deepest = 0;
  for (const TreeNode& node : nodes) deepest = std::max(deepest, node.level);
  return deepest;
}

HappyTree build_tree(const Params& p, int max_digits, std::uint64_t budget) {
  if (p.exponent < 2) throw std::invalid_argument("build_tree: exponent must be >= 2");
  if (max_digits < 1) throw std::invalid_argument("build_tree: max_digits must be >= 1");
  check_enumeration_range(int_pow(BigInt(p.base), max_digits), budget, "build_tree");

  HappyTree tree{p, max_digits, {}, {}};
  tree.nodes.push_back(TreeNode{1, 0, -1, 0, {}});
  tree.index.emplace(1, 0);

  // level at a time so nodes end up ordered by (level, value) even though
  // children of different parents interleave
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<TreeNode> next_level;
    for (const std::size_t at : frontier) {
      const std::int64_t value = tree.nodes[at].value;
      const int level = tree.nodes[at].level;
      const auto children = enumerate_children(value, p, max_digits, budget);
      tree.nodes[at].children = children;
      for (std::size_t i = 0; i < children.size(); ++i)
        next_level.push_back(
            TreeNode{children[i], level + 1, value, static_cast<int>(i + 1), {}});
    }
    std::sort(next_level.begin(), next_level.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.value < b.value; });
    frontier.clear();
    for (TreeNode& node : next_level) {
      frontier.push_back(tree.nodes.size());
      tree.index.emplace(node.value, tree.nodes.size());
      tree.nodes.push_back(std::move(node));
    }
  }

  // BFS depth and orbit height must agree on every vertex
  for (const TreeNode& node : tree.nodes) {
    if (height(BigInt(node.value), p) != static_cast<std::size_t>(node.level))
      throw std::logic_error("build_tree: level disagrees with orbit height");
  }
  return tree;
}

std::int64_t edge_label(const BigInt& x, const Params& p, std::uint64_t budget) {
  if (x <= 1) throw std::invalid_argument("edge_label: x must exceed 1");
  const BigInt parent = happy_step(x, p);
  if (parent == x)
    throw std::invalid_argument("edge_label: fixed points carry no tree edge");
  const int digit_count = static_cast<int>(to_digits(x, p.base).digits.size());
  if (parent > kInt64Max)
    throw BudgetExceeded("edge_label: parent value exceeds the machine range");
  const auto siblings =
      enumerate_children(parent.convert_to<std::int64_t>(), p, digit_count, budget);
  const auto xv = x.convert_to<std::int64_t>();
  assert(std::binary_search(siblings.begin(), siblings.end(), xv));
  return std::upper_bound(siblings.begin(), siblings.end(), xv) - siblings.begin();
}

Address address(const BigInt& n, const Params& p, std::uint64_t budget) {
  const OrbitReport report = orbit(n, p);
  if (report.classification != Classification::Happy)
    throw std::invalid_argument("address: n is not happy under these parameters");
  Address out{{}, 0};
  // iterates run n -> ... -> 1; labels read from the root side
  for (std::size_t i = report.iterates.size() - 1; i-- > 0;) {
    const std::int64_t label = edge_label(report.iterates[i], p, budget);
    out.labels.push_back(label);
    out.value += label;
  }
  return out;
}

}  // namespace happy
