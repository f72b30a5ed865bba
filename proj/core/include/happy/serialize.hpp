#pragma once

#include "happy/cycle_graph.hpp"
#include "happy/happy_tree.hpp"
#include "happy/numerals.hpp"

#include <string>
#include <vector>

namespace happy {

// JSON documents use a fixed field order so output is byte-reproducible.
// Integers that fit in 64 bits are JSON numbers; anything wider becomes a
// decimal string. Parsers accept both and round-trip exactly.

std::string orbit_to_json(const OrbitReport& report);
OrbitReport orbit_from_json(const std::string& text);

std::string tree_to_json(const HappyTree& tree);
HappyTree tree_from_json(const std::string& text);

std::string cycles_to_json(const std::vector<Cycle>& cycles);
std::vector<Cycle> cycles_from_json(const std::string& text);

std::string cycle_graph_to_json(const CycleGraph& graph);
CycleGraph cycle_graph_from_json(const std::string& text);

struct DotOptions {
  bool tuple_labels = false;  // label vertices (d_1,...,d_r)_b instead of decimal
  bool hex_digits = false;    // pack base-16 tuples as hex strings
};

// Edges run in map direction n -> step(n) and carry the sibling rank;
// cycle edges are bold red and unranked. Vertex order is deterministic.
std::string tree_to_dot(const HappyTree& tree, const DotOptions& options = {});
std::string cycle_graph_to_dot(const CycleGraph& graph, const DotOptions& options = {});

// "(1,2,5)_30"; with hex_digits and base 16, "(5DEE)_16". Zero is "(0)_b".
std::string tuple_notation(const BigInt& n, int base, bool hex_digits = false);

// Digit string with repeats compressed, e.g. "(1^2,3,6,24,29^996)_30".
std::string run_notation(const BigInt& n, int base);

}  // namespace happy
