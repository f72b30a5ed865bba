#include "happy/cycle_graph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace happy {

const TreeNode* CycleGraph::find(std::int64_t value) const {
  const auto at = index.find(value);
  return at == index.end() ? nullptr : &nodes[at->second];
}

int CycleGraph::depth() const {
  int deepest = 0;
  for (const TreeNode& node : nodes) deepest = std::max(deepest, node.level);
  return deepest;
}

CycleGraph build_cycle_graph(const Params& p, int max_digits, const Cycle& cycle,
                             std::uint64_t budget) {
  if (max_digits < 1)
    throw std::invalid_argument("build_cycle_graph: max_digits must be >= 1");
  if (cycle.members.empty())
    throw std::invalid_argument("build_cycle_graph: empty cycle");
  const BigInt bk = int_pow(BigInt(p.base), max_digits);
  if (bk > budget || bk > std::numeric_limits<std::int64_t>::max())
    throw BudgetExceeded("build_cycle_graph: base^max_digits " + bk.str() +
                         " exceeds budget " + std::to_string(budget));

  // normalize the rotation, then insist on a genuine non-{1} cycle below b^k
  std::vector<BigInt> members = cycle.members;
  std::rotate(members.begin(), std::min_element(members.begin(), members.end()),
              members.end());
  if (members.size() == 1 && members[0] == 1)
    throw std::invalid_argument(
        "build_cycle_graph: {1} roots the happy tree, not a cycle graph");
  std::set<BigInt> distinct(members.begin(), members.end());
  if (distinct.size() != members.size())
    throw std::invalid_argument("build_cycle_graph: repeated cycle member");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] >= bk)
      throw std::invalid_argument("build_cycle_graph: cycle member outside [1, base^max_digits)");
    const BigInt next = happy_step(members[i], p);
    if (next != members[(i + 1) % members.size()])
      throw std::invalid_argument("build_cycle_graph: members do not form a cycle of the map");
  }

  CycleGraph graph{p, max_digits, Cycle{members}, {}, {}};
  const std::size_t length = members.size();
  std::vector<std::int64_t> on_cycle(length);
  for (std::size_t i = 0; i < length; ++i) {
    on_cycle[i] = members[i].convert_to<std::int64_t>();
    graph.index.emplace(on_cycle[i], i);
    graph.nodes.push_back(TreeNode{on_cycle[i], 0, -1, 0, {}});
  }

  std::vector<std::size_t> frontier(length);
  for (std::size_t i = 0; i < length; ++i) frontier[i] = i;
  while (!frontier.empty()) {
    std::vector<TreeNode> next_level;
    for (const std::size_t at : frontier) {
      const std::int64_t value = graph.nodes[at].value;
      const int level = graph.nodes[at].level;
      auto children = enumerate_children(value, p, max_digits, budget);
      if (level == 0) {
        // drop the in-cycle predecessor so the fan stays a tree
        const std::int64_t predecessor = on_cycle[(at + length - 1) % length];
        const auto found = std::find(children.begin(), children.end(), predecessor);
        if (found != children.end()) children.erase(found);
      }
      graph.nodes[at].children = children;
      for (std::size_t i = 0; i < children.size(); ++i)
        next_level.push_back(
            TreeNode{children[i], level + 1, value, static_cast<int>(i + 1), {}});
    }
    std::sort(next_level.begin(), next_level.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.value < b.value; });
    frontier.clear();
    for (TreeNode& node : next_level) {
      frontier.push_back(graph.nodes.size());
      graph.index.emplace(node.value, graph.nodes.size());
      graph.nodes.push_back(std::move(node));
    }
  }

  // every vertex must fall into exactly this cycle, at distance == level
  for (const TreeNode& node : graph.nodes) {
    const OrbitReport report = orbit(BigInt(node.value), p);
    if (report.classification != Classification::Unhappy ||
        report.cycle->members != members ||
        report.height != static_cast<std::size_t>(node.level))
      throw std::logic_error("build_cycle_graph: vertex orbit disagrees with the graph");
  }
  return graph;
}

FixedPointFamily fixed_point_family(const BigInt& t, const BigInt& ell) {
  if (t < 1) throw std::invalid_argument("fixed_point_family: t must be >= 1");
  if (ell < 1) throw std::invalid_argument("fixed_point_family: ell must be >= 1");
  FixedPointFamily f{t, ell, (ell * ell + 1) * t + ell, t, ell * t + 1, 0};
  f.value = f.x1 * f.base + f.x0;
  if (f.x1 < 1 || f.x1 >= f.base || f.x0 < 1 || f.x0 >= f.base ||
      f.x1 * f.x1 + f.x0 * f.x0 != f.value)
    throw std::logic_error("fixed_point_family: identity failed");
  return f;
}

TwoCycleFamily two_cycle_family(const BigInt& t) {
  if (t < 0) throw std::invalid_argument("two_cycle_family: t must be >= 0");
  TwoCycleFamily f{t, 5 * t + 3, t, 3 * t + 2, 2 * t + 1, t + 1, 0, 0};
  f.x = f.x1 * f.base + f.x0;
  f.y = f.y1 * f.base + f.y0;
  if (f.x1 * f.x1 + f.x0 * f.x0 != f.y || f.y1 * f.y1 + f.y0 * f.y0 != f.x ||
      f.y != 2 * f.x)
    throw std::logic_error("two_cycle_family: identity failed");
  return f;
}

std::vector<Cycle> search_cycles_of_length(const Params& p, std::size_t length,
                                           std::uint64_t budget) {
  if (length < 1)
    throw std::invalid_argument("search_cycles_of_length: length must be >= 1");
  std::vector<Cycle> hits;
  for (Cycle& cycle : find_all_cycles(p, budget))
    if (cycle.members.size() == length) hits.push_back(std::move(cycle));
  return hits;
}

}  // namespace happy
