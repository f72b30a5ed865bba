#include "cli.hpp"

#include "happy/constructor.hpp"
#include "happy/cycle_graph.hpp"
#include "happy/happy_tree.hpp"
#include "happy/numerals.hpp"
#include "happy/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace happy::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int exponent = 2;
  int base = 10;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string format = "text";
  std::string out_path;
  bool tuple = false;
  bool hex = false;
};

BigInt parse_big(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("expected a decimal integer");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("'" + text + "' is not a nonnegative decimal integer");
  return BigInt(text);
}

Json big_field(const BigInt& n) {
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (n <= hi) return n.convert_to<std::int64_t>();
  return n.str();
}

std::string render_value(const BigInt& n, int base, const Options& opt) {
  std::string text = n.str();
  if (opt.tuple) text += " " + tuple_notation(n, base, opt.hex);
  return text;
}

std::string cycle_text(const Cycle& cycle) {
  std::string text = "[";
  for (std::size_t i = 0; i < cycle.members.size(); ++i) {
    if (i) text += ",";
    text += cycle.members[i].str();
  }
  return text + "]";
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + opt.out_path);
  file << text;
  file.flush();
  if (!file) throw std::invalid_argument("failed writing output file: " + opt.out_path);
}

// text rendering of the per-level value lists shared by tree and cycle-graph
void render_levels(std::ostringstream& os, const std::vector<TreeNode>& nodes,
                   int max_level, int first_level, int base, const Options& opt) {
  for (int level = first_level; level <= max_level; ++level) {
    os << "level " << level << ":";
    bool first = true;
    for (const TreeNode& node : nodes) {
      if (node.level != level) continue;
      os << (first ? " " : ", ") << render_value(BigInt(node.value), base, opt);
      first = false;
    }
    os << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exponent-e, base-b happy number dynamics"};
  app.require_subcommand(1);

  Options opt;
  std::string number;
  std::string seed_text;
  std::string cycle_spec;
  std::string t_text, ell_text;
  int target_height = 0;
  int max_digits = 0;
  std::size_t length_filter = 0;
  bool want_list = false;
  bool want_count = false;

  const auto add_common = [&](CLI::App* cmd, std::initializer_list<const char*> formats) {
    cmd->add_option("-e,--exp", opt.exponent, "digit power exponent")
        ->check(CLI::Range(1, 1000));
    cmd->add_option("-b,--base", opt.base, "numeral base")->check(CLI::Range(2, 1000000));
    cmd->add_option("--budget", opt.budget, "enumeration budget (values scanned)");
    std::string helper = "output format (";
    bool first = true;
    for (const char* f : formats) {
      helper += std::string(first ? "" : ", ") + f;
      first = false;
    }
    helper += ")";
    cmd->add_option("--format", opt.format, helper)
        ->check(CLI::IsMember(std::vector<std::string>(formats.begin(), formats.end())));
    cmd->add_option("--out", opt.out_path, "write the result to a file");
    cmd->add_flag("--tuple", opt.tuple, "append digit-tuple notation to values");
    cmd->add_flag("--hex", opt.hex, "pack base-16 tuples as hex strings");
  };

  auto* classify = app.add_subcommand("classify", "orbit, classification and height of n");
  classify->add_option("n", number, "starting value (decimal)")->required();
  add_common(classify, {"text", "json"});
  classify->callback([&] {
    const Params p(opt.exponent, opt.base);
    const OrbitReport report = orbit(parse_big(number), p);
    std::string text;
    if (opt.format == "json") {
      text = orbit_to_json(report);
    } else {
      std::ostringstream os;
      if (report.classification == Classification::Happy)
        os << "happy, height " << report.height << "\n";
      else
        os << "unhappy, height " << report.height << ", cycle "
           << cycle_text(*report.cycle) << "\n";
      os << "iterates:";
      for (std::size_t i = 0; i < report.iterates.size(); ++i)
        os << (i ? ", " : " ") << render_value(report.iterates[i], p.base, opt);
      os << "\n";
      text = os.str();
    }
    emit(text, opt, out);
  });

  auto* construct = app.add_subcommand("construct", "greedy happy number of prescribed height");
  construct->add_option("--height", target_height, "target height (> 1)")->required();
  construct->add_option("--seed", seed_text, "height-1 seed (default: the base itself)");
  add_common(construct, {"text", "json"});
  construct->callback([&] {
    const Params p(opt.exponent, opt.base);
    std::optional<BigInt> seed;
    if (!seed_text.empty()) seed = parse_big(seed_text);
    const HeightSequence sequence = build_height_sequence(p, target_height, seed);
    std::string text;
    if (opt.format == "json") {
      Json doc;
      doc["e"] = p.exponent;
      doc["b"] = p.base;
      doc["height"] = target_height;
      Json members = Json::array();
      for (const BigInt& m : sequence.members) members.push_back(big_field(m));
      doc["members"] = std::move(members);
      text = doc.dump(2) + "\n";
    } else {
      std::ostringstream os;
      for (std::size_t i = 0; i < sequence.members.size(); ++i)
        os << (i ? ", " : "") << sequence.members[i].str();
      os << "\n";
      // huge members get a readable digit-run form as well
      static const BigInt hi = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < sequence.members.size(); ++i)
        if (sequence.members[i] > hi)
          os << "N_" << (i + 1) << " = " << run_notation(sequence.members[i], p.base)
             << "\n";
      text = os.str();
    }
    emit(text, opt, out);
  });

  auto* tree_cmd = app.add_subcommand("tree", "happy numbers below base^k as a tree");
  tree_cmd->add_option("-k,--digits", max_digits, "digit budget k")->required();
  add_common(tree_cmd, {"text", "json", "dot"});
  tree_cmd->callback([&] {
    const Params p(opt.exponent, opt.base);
    const HappyTree tree = build_tree(p, max_digits, opt.budget);
    std::string text;
    if (opt.format == "json") {
      text = tree_to_json(tree);
    } else if (opt.format == "dot") {
      text = tree_to_dot(tree, DotOptions{opt.tuple, opt.hex});
    } else {
      std::ostringstream os;
      os << "tree e=" << p.exponent << " b=" << p.base << " k=" << max_digits << ": "
         << tree.size() << " vertices, depth " << tree.depth() << "\n";
      render_levels(os, tree.nodes, tree.depth(), 0, p.base, opt);
      text = os.str();
    }
    emit(text, opt, out);
  });

  auto* children = app.add_subcommand("children", "preimage fan of m below base^k");
  children->add_option("m", number, "parent value (decimal)")->required();
  children->add_option("-k,--digits", max_digits, "digit budget k")->required();
  auto* list_flag = children->add_flag("--list", want_list, "list the children");
  auto* count_flag =
      children->add_flag("--count", want_count, "print the count (default)");
  list_flag->excludes(count_flag);
  add_common(children, {"text", "json"});
  children->callback([&] {
    const Params p(opt.exponent, opt.base);
    const BigInt m = parse_big(number);
    std::string text;
    if (want_list) {
      if (m > std::numeric_limits<std::int64_t>::max())
        throw std::invalid_argument("children --list: m exceeds the machine range");
      const auto values =
          enumerate_children(m.convert_to<std::int64_t>(), p, max_digits, opt.budget);
      if (opt.format == "json") {
        Json doc;
        doc["m"] = big_field(m);
        doc["e"] = p.exponent;
        doc["b"] = p.base;
        doc["k"] = max_digits;
        doc["children"] = values;
        text = doc.dump(2) + "\n";
      } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < values.size(); ++i)
          os << (i ? ", " : "") << render_value(BigInt(values[i]), p.base, opt);
        os << "\n";
        text = os.str();
      }
    } else {
      // closed-form count of preimages below b^k, minus the self-loop when
      // m is a fixed point, so it always matches the fan listed above
      BigInt total = count_children_general(m, p, max_digits);
      if (m < int_pow(BigInt(p.base), max_digits) && happy_step(m, p) == m) total -= 1;
      if (opt.format == "json") {
        Json doc;
        doc["m"] = big_field(m);
        doc["e"] = p.exponent;
        doc["b"] = p.base;
        doc["k"] = max_digits;
        doc["count"] = big_field(total);
        text = doc.dump(2) + "\n";
      } else {
        text = total.str() + "\n";
      }
    }
    emit(text, opt, out);
  });

  auto* cycles_cmd = app.add_subcommand("cycles", "census of all cycles of the map");
  auto* length_opt =
      cycles_cmd->add_option("--length", length_filter, "only cycles of this length");
  add_common(cycles_cmd, {"text", "json"});
  cycles_cmd->callback([&] {
    const Params p(opt.exponent, opt.base);
    const std::vector<Cycle> found = length_opt->count() > 0
                                         ? search_cycles_of_length(p, length_filter, opt.budget)
                                         : find_all_cycles(p, opt.budget);
    std::string text;
    if (opt.format == "json") {
      text = cycles_to_json(found);
    } else {
      std::ostringstream os;
      for (const Cycle& cycle : found) os << cycle_text(cycle) << "\n";
      text = os.str();
    }
    emit(text, opt, out);
  });

  auto* graph_cmd = app.add_subcommand("cycle-graph", "unhappy fan-in over one cycle");
  graph_cmd
      ->add_option("--cycle", cycle_spec,
                   "an unhappy value, or the comma-separated cycle members")
      ->required();
  graph_cmd->add_option("-k,--digits", max_digits, "digit budget k")->required();
  add_common(graph_cmd, {"text", "json", "dot"});
  graph_cmd->callback([&] {
    const Params p(opt.exponent, opt.base);
    std::vector<BigInt> members;
    std::string item;
    std::istringstream split(cycle_spec);
    while (std::getline(split, item, ',')) members.push_back(parse_big(item));
    if (members.empty()) throw std::invalid_argument("--cycle: no members given");
    Cycle cycle{members};
    if (members.size() == 1) {
      // a single value names the cycle its own orbit falls into
      const OrbitReport report = orbit(members[0], p);
      if (report.classification != Classification::Unhappy)
        throw std::invalid_argument("--cycle: " + members[0].str() +
                                    " is happy, not on an unhappy cycle");
      cycle = *report.cycle;
    }
    const CycleGraph graph = build_cycle_graph(p, max_digits, cycle, opt.budget);
    std::string text;
    if (opt.format == "json") {
      text = cycle_graph_to_json(graph);
    } else if (opt.format == "dot") {
      text = cycle_graph_to_dot(graph, DotOptions{opt.tuple, opt.hex});
    } else {
      std::ostringstream os;
      os << "cycle-graph e=" << p.exponent << " b=" << p.base << " k=" << max_digits
         << ": " << graph.size() << " vertices, depth " << graph.depth() << "\n";
      os << "cycle: " << cycle_text(graph.cycle) << "\n";
      render_levels(os, graph.nodes, graph.depth(), 1, p.base, opt);
      text = os.str();
    }
    emit(text, opt, out);
  });

  auto* family = app.add_subcommand("family", "parametric cycle families (e = 2)");
  family->require_subcommand(1);

  auto* fixed = family->add_subcommand("fixed-point", "two-digit fixed points X = (t, lt+1)_b");
  fixed->add_option("--t", t_text, "parameter t >= 1")->required();
  fixed->add_option("--ell", ell_text, "parameter l >= 1")->required();
  fixed->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  fixed->add_option("--out", opt.out_path, "write the result to a file");
  fixed->callback([&] {
    const FixedPointFamily f = fixed_point_family(parse_big(t_text), parse_big(ell_text));
    std::string text;
    if (opt.format == "json") {
      Json doc;
      doc["kind"] = "fixed-point";
      doc["t"] = big_field(f.t);
      doc["ell"] = big_field(f.ell);
      doc["b"] = big_field(f.base);
      doc["x1"] = big_field(f.x1);
      doc["x0"] = big_field(f.x0);
      doc["X"] = big_field(f.value);
      text = doc.dump(2) + "\n";
    } else {
      text = "b=" + f.base.str() + ", X=" + f.value.str() + "\n";
    }
    emit(text, opt, out);
  });

  auto* two = family->add_subcommand("two-cycle", "two-cycles X <-> Y = 2X in bases 5t+3");
  two->add_option("--t", t_text, "parameter t >= 0")->required();
  two->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  two->add_option("--out", opt.out_path, "write the result to a file");
  two->callback([&] {
    const TwoCycleFamily f = two_cycle_family(parse_big(t_text));
    std::string text;
    if (opt.format == "json") {
      Json doc;
      doc["kind"] = "two-cycle";
      doc["t"] = big_field(f.t);
      doc["b"] = big_field(f.base);
      doc["x1"] = big_field(f.x1);
      doc["x0"] = big_field(f.x0);
      doc["y1"] = big_field(f.y1);
      doc["y0"] = big_field(f.y0);
      doc["X"] = big_field(f.x);
      doc["Y"] = big_field(f.y);
      text = doc.dump(2) + "\n";
    } else {
      text = "b=" + f.base.str() + ", X=" + f.x.str() + ", Y=" + f.y.str() + "\n";
    }
    emit(text, opt, out);
  });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("happy");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace happy::cli
