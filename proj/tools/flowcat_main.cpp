// Command-line front end for the flow-category calculus: validate and
// inspect category files, apply move scripts, reduce to (primary) Smith
// normal form, compute graded homology, compare categories up to
// isomorphism, emit the built-in examples, and drive an interactive REPL.
//
// Exit codes: 0 success, 1 validation / comparison failure, 2 parse or
// usage error, 3 illegal move.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowcat/chain.hpp"
#include "flowcat/components.hpp"
#include "flowcat/examples.hpp"
#include "flowcat/homology.hpp"
#include "flowcat/io.hpp"
#include "flowcat/iso.hpp"
#include "flowcat/moves.hpp"
#include "flowcat/reduce.hpp"
#include "flowcat/script.hpp"
#include "flowcat/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitIllegalMove = 3;

struct ExitWith {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw ExitWith{kExitParse};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw ExitWith{kExitParse};
  }
  out << text;
}

flowcat::FlowCategory load(const std::string& path) {
  try {
    return flowcat::parse(read_file(path));
  } catch (const flowcat::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    throw ExitWith{kExitParse};
  }
}

// Loads and validates; prints violations and exits 1 when invalid.
flowcat::FlowCategory load_valid(const std::string& path) {
  flowcat::FlowCategory cat = load(path);
  flowcat::ValidationReport rep = flowcat::validate(cat);
  if (!rep.ok()) {
    for (const auto& v : rep.violations)
      std::cerr << path << ": " << flowcat::code_name(v.code) << ": "
                << v.message << "\n";
    std::cerr << path << ": invalid (" << rep.violations.size()
              << " violation" << (rep.violations.size() == 1 ? "" : "s")
              << ")\n";
    throw ExitWith{kExitInvalid};
  }
  return cat;
}

struct Counts {
  std::size_t points = 0, intervals = 0, circles = 0;
};

Counts counts(const flowcat::FlowCategory& cat) {
  Counts c;
  for (const auto& [key, mod] : cat.zero_moduli()) c.points += mod.points.size();
  for (const auto& [key, mod] : cat.one_moduli()) {
    c.intervals += mod.intervals.size();
    c.circles += mod.circles.size();
  }
  return c;
}

std::string delta(std::size_t before, std::size_t after) {
  long long d = static_cast<long long>(after) - static_cast<long long>(before);
  std::string s = std::to_string(after) + " (";
  if (d >= 0) s += "+";
  s += std::to_string(d) + ")";
  return s;
}

// One-line move summary: the move plus how the component counts changed.
std::string move_summary(const flowcat::Move& move, const Counts& before,
                         const Counts& after) {
  return flowcat::move_line(move) + "  ->  points " +
         delta(before.points, after.points) + ", intervals " +
         delta(before.intervals, after.intervals) + ", circles " +
         delta(before.circles, after.circles);
}

void print_moduli_summary(std::ostream& os, const flowcat::FlowCategory& cat) {
  for (const auto& [key, mod] : cat.zero_moduli()) {
    if (mod.points.empty()) continue;
    os << "M(" << key.upper << "," << key.lower << "):";
    for (const auto& p : mod.points) os << " " << p.id << (p.sign > 0 ? "+" : "-");
    os << "\n";
  }
  for (const auto& [key, mod] : cat.one_moduli()) {
    if (mod.empty()) continue;
    os << "M(" << key.upper << "," << key.lower << "):";
    for (const auto& iv : mod.intervals)
      os << " " << iv.id << "[fr=" << iv.fr << "]";
    for (const auto& c : mod.circles)
      os << " " << c.id << "(label=" << c.label << ")";
    os << "\n";
  }
}

void print_chain(std::ostream& os, const flowcat::FlowCategory& cat) {
  flowcat::ChainComplex cc = flowcat::chain_complex(cat);
  if (cc.empty()) {
    os << "chain complex: empty\n";
    return;
  }
  for (auto it = cc.step.rbegin(); it != cc.step.rend(); ++it) {
    int g = it->first;
    const flowcat::IntMatrix& M = it->second;
    os << "d" << g << " (" << g << " -> " << g - 1 << "), cols";
    for (const auto& id : cc.basis[g]) os << " " << id;
    os << ", rows";
    for (const auto& id : cc.basis[g - 1]) os << " " << id;
    os << ":\n";
    for (std::size_t r = 0; r < M.rows(); ++r) {
      os << "  [";
      for (std::size_t c = 0; c < M.cols(); ++c)
        os << " " << M.at(r, c).get_str();
      os << " ]\n";
    }
  }
}

int cmd_validate(const std::string& file) {
  flowcat::FlowCategory cat = load_valid(file);
  Counts c = counts(cat);
  std::cout << "valid: " << cat.objects().size() << " objects, " << c.points
            << " points, " << c.intervals << " intervals, " << c.circles
            << " circles\n";
  return kExitOk;
}

int cmd_show(const std::string& file) {
  flowcat::FlowCategory cat = load_valid(file);
  std::cout << "objects (" << cat.objects().size() << "):\n";
  for (const auto& id : cat.objects_by_grading())
    std::cout << "  " << id << " @ " << cat.grading(id) << "\n";
  std::cout << "moduli:\n";
  std::ostringstream mod;
  print_moduli_summary(mod, cat);
  std::istringstream lines(mod.str());
  for (std::string line; std::getline(lines, line);)
    std::cout << "  " << line << "\n";
  print_chain(std::cout, cat);
  auto comps = flowcat::components(cat);
  std::cout << "components (" << comps.size() << "):";
  for (const auto& comp : comps) {
    std::cout << " {";
    for (std::size_t i = 0; i < comp.size(); ++i)
      std::cout << (i ? " " : "") << comp[i];
    std::cout << "}";
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_apply(const std::string& cat_file, const std::string& script_file,
              const std::string& out_file) {
  flowcat::FlowCategory cat = load_valid(cat_file);
  std::vector<flowcat::ScriptEntry> script;
  try {
    script = flowcat::parse_script(read_file(script_file));
  } catch (const flowcat::ParseError& e) {
    std::cerr << script_file << ": " << e.what() << "\n";
    return kExitParse;
  }
  for (const auto& entry : script) {
    Counts before = counts(cat);
    try {
      cat = flowcat::apply_move(cat, entry.move);
    } catch (const flowcat::MoveError& e) {
      std::cerr << script_file << ":" << entry.line << ": illegal move: "
                << e.what() << "\n";
      return kExitIllegalMove;
    }
    std::cerr << move_summary(entry.move, before, counts(cat)) << "\n";
  }
  std::string text = flowcat::serialize(cat);
  if (out_file.empty())
    std::cout << text;
  else
    write_file(out_file, text);
  return kExitOk;
}

int cmd_reduce(const std::string& file, bool primary,
               const std::string& out_file, const std::string& log_file) {
  flowcat::FlowCategory cat = load_valid(file);
  flowcat::ReduceResult res =
      primary ? flowcat::primary_snf_reduce(cat) : flowcat::snf_reduce(cat);
  std::cerr << (primary ? "primary smith reduction: " : "smith reduction: ")
            << res.log.entries.size() << " moves\n";
  if (!log_file.empty()) {
    std::vector<flowcat::Move> moves;
    for (const auto& e : res.log.entries) moves.push_back(e.move);
    write_file(log_file, flowcat::serialize_script(moves));
  }
  std::string text = flowcat::serialize(res.category);
  if (out_file.empty())
    std::cout << text;
  else
    write_file(out_file, text);
  return kExitOk;
}

int cmd_homology(const std::string& file, const std::string& coeff) {
  flowcat::FlowCategory cat = load_valid(file);
  flowcat::ChainComplex cc = flowcat::chain_complex(cat);
  if (cc.empty()) {
    std::cout << "homology: empty category\n";
    return kExitOk;
  }
  if (coeff == "Z") {
    auto h = flowcat::homology_Z(cc);
    for (const auto& [g, hg] : h) {
      std::cout << "H_" << g << " = ";
      if (hg.free_rank == 0 && hg.torsion.empty()) {
        std::cout << "0\n";
        continue;
      }
      bool first = true;
      if (hg.free_rank > 0) {
        std::cout << "Z";
        if (hg.free_rank > 1) std::cout << "^" << hg.free_rank;
        first = false;
      }
      for (const auto& t : hg.torsion) {
        if (!first) std::cout << " + ";
        std::cout << "Z/" << t.get_str();
        first = false;
      }
      std::cout << "\n";
    }
  } else {
    unsigned p = coeff == "Z2" ? 2 : 3;
    auto h = flowcat::homology_mod_p(cc, p);
    for (const auto& [g, dim] : h)
      std::cout << "dim_{Z/" << p << "} H_" << g << " = " << dim << "\n";
  }
  return kExitOk;
}

int cmd_iso(const std::string& file_a, const std::string& file_b) {
  flowcat::FlowCategory a = load_valid(file_a);
  flowcat::FlowCategory b = load_valid(file_b);
  auto iso = flowcat::iso_check(a, b);
  if (!iso) {
    std::cout << "not isomorphic\n";
    return kExitInvalid;
  }
  std::cout << "isomorphic\n";
  for (const auto& [from, to] : iso->objects)
    std::cout << "  " << from << " -> " << to << "\n";
  return kExitOk;
}

int cmd_examples(const std::string& name) {
  if (!flowcat::examples::is_category_name(name) &&
      !flowcat::examples::is_script_name(name)) {
    std::cerr << "unknown example '" << name << "'; available:";
    for (const auto& n : flowcat::examples::names()) std::cerr << " " << n;
    std::cerr << "\n";
    return kExitParse;
  }
  std::cout << flowcat::examples::text(name);
  return kExitOk;
}

int cmd_repl(const std::string& file) {
  flowcat::FlowCategory initial = load_valid(file);
  flowcat::FlowCategory cat = initial;
  flowcat::MoveLog log;

  std::cout << "loaded " << file << " (digest " << flowcat::digest(cat)
            << "); move lines, 'undo', 'log', 'save <file>', 'show', 'quit'\n";
  std::string line;
  while (true) {
    std::cerr << "flowcat> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' ||
                                trimmed.back() == '\r'))
      trimmed.pop_back();
    std::size_t start = trimmed.find_first_not_of(" \t");
    trimmed = start == std::string::npos ? "" : trimmed.substr(start);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (trimmed == "quit" || trimmed == "exit") break;
    if (trimmed == "undo") {
      if (log.entries.empty()) {
        std::cout << "nothing to undo\n";
        continue;
      }
      log.entries.pop_back();
      cat = flowcat::replay(initial, log);
      std::cout << "undone; " << log.entries.size()
                << " moves in log; digest " << flowcat::digest(cat) << "\n";
      continue;
    }
    if (trimmed == "log") {
      std::cout << "# " << log.entries.size() << " moves\n";
      for (const auto& e : log.entries)
        std::cout << flowcat::move_line(e.move) << "\n";
      continue;
    }
    if (trimmed == "show") {
      print_moduli_summary(std::cout, cat);
      print_chain(std::cout, cat);
      continue;
    }
    if (trimmed.rfind("save ", 0) == 0) {
      std::string path = trimmed.substr(5);
      try {
        write_file(path, flowcat::serialize(cat));
      } catch (const ExitWith&) {
        continue;  // message already printed; session continues
      }
      std::cout << "saved " << path << "\n";
      continue;
    }
    std::vector<flowcat::ScriptEntry> parsed;
    try {
      parsed = flowcat::parse_script(trimmed);
    } catch (const flowcat::ParseError& e) {
      std::cout << "parse error: " << e.what() << "\n";
      continue;
    }
    if (parsed.empty()) continue;
    Counts before = counts(cat);
    try {
      cat = flowcat::apply_logged(cat, parsed.front().move, log);
    } catch (const flowcat::MoveError& e) {
      std::cout << "illegal move: " << e.what() << "\n";
      continue;
    }
    std::cout << move_summary(parsed.front().move, before, counts(cat)) << "\n";
    print_moduli_summary(std::cout, cat);
    print_chain(std::cout, cat);
  }
  flowcat::FlowCategory replayed = flowcat::replay(initial, log);
  std::cout << "log replays cleanly: " << log.entries.size()
            << " moves, final digest " << flowcat::digest(replayed) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flowcat: a calculus for framed flow categories"};
  app.require_subcommand(1);

  std::string file, file_b, script_file, out_file, log_file, name;
  std::string coeff = "Z";
  bool primary = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a category file");
  validate_cmd->add_option("file", file, "category file")->required();

  auto* show_cmd = app.add_subcommand("show", "Print objects, moduli, chain data");
  show_cmd->add_option("file", file, "category file")->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply a move script");
  apply_cmd->add_option("category", file, "category file")->required();
  apply_cmd->add_option("script", script_file, "move script")->required();
  apply_cmd->add_option("-o,--output", out_file, "write result here instead of stdout");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce the chain data to Smith normal form by moves");
  reduce_cmd->add_option("file", file, "category file")->required();
  reduce_cmd->add_flag("--primary", primary, "refine to primary (prime-power) Smith form");
  reduce_cmd->add_option("-o,--output", out_file, "write result here instead of stdout");
  reduce_cmd->add_option("--log", log_file, "write the move log as a replayable script");

  auto* hom_cmd = app.add_subcommand("homology", "Graded homology of the chain data");
  hom_cmd->add_option("file", file, "category file")->required();
  hom_cmd->add_option("--coeff", coeff, "coefficients: Z, Z2, or Z3")
      ->check(CLI::IsMember({"Z", "Z2", "Z3"}));

  auto* iso_cmd = app.add_subcommand("iso", "Compare two categories up to isomorphism");
  iso_cmd->add_option("a", file, "first category file")->required();
  iso_cmd->add_option("b", file_b, "second category file")->required();

  auto* ex_cmd = app.add_subcommand("examples", "Emit a built-in example category or script");
  ex_cmd->add_option("name", name, "example name")->required();

  auto* repl_cmd = app.add_subcommand("repl", "Interactive move session");
  repl_cmd->add_option("file", file, "category file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file);
    if (show_cmd->parsed()) return cmd_show(file);
    if (apply_cmd->parsed()) return cmd_apply(file, script_file, out_file);
    if (reduce_cmd->parsed()) return cmd_reduce(file, primary, out_file, log_file);
    if (hom_cmd->parsed()) return cmd_homology(file, coeff);
    if (iso_cmd->parsed()) return cmd_iso(file, file_b);
    if (ex_cmd->parsed()) return cmd_examples(name);
    if (repl_cmd->parsed()) return cmd_repl(file);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const flowcat::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const flowcat::MoveError& e) {
    std::cerr << "illegal move: " << e.what() << "\n";
    return kExitIllegalMove;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
