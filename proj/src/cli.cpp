#include "reslat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reslat/builders.hpp"
#include "reslat/classops.hpp"
#include "reslat/congruence.hpp"
#include "reslat/decomposition.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/io.hpp"
#include "reslat/properties.hpp"
#include "reslat/term.hpp"

namespace reslat::cli {

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFalse = 1, kInvalid = 2 };

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FinAlg load_valid(const std::string& path) {
  FinAlg a = load_algebra(path);
  const auto report = validate(a);
  if (!report.ok()) throw InvalidInput(path + ": not a residuated lattice:\n" + report.describe());
  return a;
}

std::string set_text(ElemSet s) {
  std::string out = "{";
  for (Elem x : s.elements()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

void emit(const FinAlg& a, const std::string& path, const std::string& stamp, std::ostream& out) {
  if (path.empty() || path == "-")
    out << algebra_to_json(a, stamp);
  else
    save_algebra(a, path, stamp);
}

struct Options {
  int jobs = default_jobs();
  std::string stamp;

  // build
  std::string build_kind;
  std::vector<std::string> build_args;
  int rot_n = 2;
  std::string delta = "id";
  std::string out_path;
  std::string name;

  // shared file arguments
  std::string file;
  std::vector<std::string> files;

  // check
  std::string builtin_name;
  std::vector<int> params;
  std::string statement;

  bool as_json = false;
  std::string dot_path;

  // enumerate / find
  int size = 0;
  int size_max = 0;
  int cap = kDefaultSizeCap;
  bool commutative = false, integral = false, chain = false, count_only = false;
  std::string out_dir;
  std::string pred;
};

int do_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const FinAlg a = load_algebra(o.file);
  const auto report = validate(a);
  if (report.ok()) {
    out << "ok: " << a.name << " (" << a.size << " elements)\n";
    return kOk;
  }
  err << report.describe();
  return kInvalid;
}

int do_build(const Options& o, std::ostream& out) {
  FinAlg a;
  auto need = [&](std::size_t k) {
    if (o.build_args.size() != k)
      throw InvalidInput("build " + o.build_kind + " expects " + std::to_string(k) + " argument(s)");
  };
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InvalidInput("expected an integer, got '" + s + "'");
    }
  };
  if (o.build_kind == "lukasiewicz") {
    need(1);
    a = lukasiewicz(number(o.build_args[0]));
  } else if (o.build_kind == "godel") {
    need(1);
    a = godel(number(o.build_args[0]));
  } else if (o.build_kind == "sum") {
    if (o.build_args.empty()) throw InvalidInput("build sum expects at least one file");
    std::vector<FinAlg> parts;
    for (const auto& f : o.build_args) parts.push_back(load_valid(f));
    a = ordinal_sum(parts);
  } else if (o.build_kind == "rotate") {
    need(1);
    a = rotate({load_valid(o.build_args[0]), o.rot_n, parse_delta(o.delta)});
  } else if (o.build_kind == "product") {
    need(2);
    a = direct_product(load_valid(o.build_args[0]), load_valid(o.build_args[1]));
  } else {
    throw InvalidInput("unknown construction '" + o.build_kind + "' (lukasiewicz, godel, sum, rotate, product)");
  }
  if (!o.name.empty()) a.name = o.name;
  emit(a, o.out_path, o.stamp, out);
  return kOk;
}

int do_check(const Options& o, std::ostream& out) {
  const FinAlg a = load_valid(o.file);
  Statement s;
  if (!o.builtin_name.empty()) {
    if (!o.statement.empty()) throw InvalidInput("give either --builtin or a statement, not both");
    s = builtin(o.builtin_name, o.params);
  } else {
    if (o.statement.empty()) throw InvalidInput("missing statement (or --builtin NAME)");
    s = parse_statement(o.statement);
  }
  const Verdict v = satisfies(a, s);
  out << to_string(s) << "\n";
  if (v.holds) {
    out << "holds\n";
    return kOk;
  }
  out << "fails at " << to_string(*v.counterexample) << "\n";
  return kFalse;
}

int do_props(const Options& o, std::ostream& out) {
  const FinAlg a = load_valid(o.file);
  const auto r = basic_properties(a);
  if (o.as_json) {
    json j;
    j["name"] = a.name;
    j["size"] = a.size;
    json props = json::object();
    for (const auto& [k, v] : r.verdicts) props[k] = v;
    j["properties"] = props;
    json wit = json::object();
    for (const auto& [k, v] : r.verdicts)
      if (auto it = r.witnesses.find(k); it != r.witnesses.end() && !v) wit[k] = it->second;
    j["witnesses"] = wit;
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [k, v] : r.verdicts) {
    out << k << ": " << (v ? "true" : "false");
    if (auto it = r.witnesses.find(k); it != r.witnesses.end() && !v) out << "  [" << it->second << "]";
    out << "\n";
  }
  return kOk;
}

int do_congruences(const Options& o, std::ostream& out) {
  const FinAlg a = load_valid(o.file);
  const auto L = congruence_filters(a);
  const bool si = is_subdirectly_irreducible(a), simple = is_simple(a);
  if (o.as_json) {
    json j;
    j["name"] = a.name;
    json fs = json::array();
    for (ElemSet f : L.filters) fs.push_back(f.elements());
    j["filters"] = fs;
    json hs = json::array();
    for (const auto& [lo, hi] : L.hasse) hs.push_back({lo, hi});
    j["hasse"] = hs;
    j["subdirectly_irreducible"] = si;
    j["simple"] = simple;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "congruence filters: " << L.filters.size() << "\n";
  for (std::size_t i = 0; i < L.filters.size(); ++i) {
    out << "  F" << i << " = " << set_text(L.filters[i]) << "  blocks:";
    for (const auto& b : filter_to_congruence(a, L.filters[i]).blocks()) {
      std::string t;
      for (Elem x : b) t += (t.empty() ? "" : ",") + std::to_string(x);
      out << " {" << t << "}";
    }
    out << "\n";
  }
  out << "hasse:";
  for (const auto& [lo, hi] : L.hasse) out << " F" << lo << "<F" << hi;
  out << "\nsubdirectly_irreducible: " << (si ? "true" : "false") << "\nsimple: " << (simple ? "true" : "false")
      << "\n";
  return kOk;
}

int do_decompose(const Options& o, std::ostream& out) {
  const FinAlg a = load_valid(o.file);
  const auto d = sum_decompose(a);
  out << "index: " << d.components.size() << "\n";
  out << "cuts:";
  for (int c : d.cuts) out << " " << c;
  out << "\n";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    const bool w = satisfies(c, builtin("wajsberg")).holds;
    out << "component " << i + 1 << ": size " << c.size << ", wajsberg " << (w ? "true" : "false") << "\n";
  }
  if (a.zero && satisfies(a, builtin("wajsberg")).holds) {
    out << "rank: " << rank(a) << "\n";
    out << "divisibility_index: " << divisibility_index(a) << "\n";
  }
  return kOk;
}

int do_varleq(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw InvalidInput("varleq expects two files");
  const FinAlg a = load_valid(o.files[0]), b = load_valid(o.files[1]);
  const bool v = var_leq(a, b);
  out << (v ? "true" : "false") << "\n";
  return v ? kOk : kFalse;
}

int do_poset(const Options& o, std::ostream& out) {
  if (o.files.empty()) throw InvalidInput("poset expects at least one file");
  std::vector<FinAlg> algs;
  for (const auto& f : o.files) algs.push_back(load_valid(f));
  const auto P = variety_poset(algs);
  const std::string dot = P.to_dot();
  if (o.dot_path.empty() || o.dot_path == "-") {
    out << dot;
  } else {
    std::ofstream f(o.dot_path);
    if (!f) throw std::runtime_error("cannot write " + o.dot_path);
    f << dot;
    out << "classes: " << P.classes.size() << ", hasse edges: " << P.hasse.size() << "\n";
  }
  return kOk;
}

SearchConstraints constraints(const Options& o) {
  SearchConstraints c;
  c.commutative = o.commutative;
  c.integral = o.integral;
  c.chain = o.chain;
  c.cap = o.cap;
  if (!o.pred.empty()) c.predicate = parse_predicate(o.pred);
  return c;
}

int do_enumerate(const Options& o, std::ostream& out) {
  SearchConstraints c = constraints(o);
  c.size = o.size;
  const auto cat = enumerate_rl(c, o.jobs);
  out << cat.size() << "\n";
  if (o.count_only) return kOk;
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (const auto& a : cat.algebras()) save_algebra(a, std::filesystem::path(o.out_dir) / (a.name + ".json"), o.stamp);
  } else {
    for (const auto& a : cat.algebras()) out << algebra_to_json(a, o.stamp);
  }
  return kOk;
}

int do_find(const Options& o, std::ostream& out) {
  if (o.pred.empty()) throw InvalidInput("find needs --pred");
  const auto found = find_example(constraints(o), o.size_max, o.jobs);
  if (!found) {
    out << "none up to size " << o.size_max << "\n";
    return kFalse;
  }
  emit(*found, o.out_path, o.stamp, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite residuated lattices: construction, validation and analysis", "reslat"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads (default: RESLAT_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--stamp", o.stamp, "Add a \"stamp\" field to emitted algebra files");

  auto* validate_cmd = app.add_subcommand("validate", "Check every residuated-lattice axiom");
  validate_cmd->add_option("file", o.file)->required();

  auto* build_cmd = app.add_subcommand("build", "Construct an algebra: lukasiewicz N | godel N | sum F... | rotate F | product A B");
  build_cmd->add_option("kind", o.build_kind)->required();
  build_cmd->add_option("args", o.build_args);
  build_cmd->add_option("--n", o.rot_n, "Rotation ladder parameter (>= 2)");
  build_cmd->add_option("--delta", o.delta, "Rotation nucleus: id or one");
  build_cmd->add_option("-o,--out", o.out_path, "Output file (default stdout)");
  build_cmd->add_option("--name", o.name, "Name of the result");

  auto* check_cmd = app.add_subcommand("check", "Check a statement or a named builtin");
  check_cmd->add_option("file", o.file)->required();
  check_cmd->add_option("statement", o.statement);
  check_cmd->add_option("--builtin", o.builtin_name);
  check_cmd->add_option("--param", o.params);

  auto* props_cmd = app.add_subcommand("props", "Report basic properties");
  props_cmd->add_option("file", o.file)->required();
  props_cmd->add_flag("--json", o.as_json);

  auto* cong_cmd = app.add_subcommand("congruences", "Congruence filter lattice");
  cong_cmd->add_option("file", o.file)->required();
  cong_cmd->add_flag("--json", o.as_json);

  auto* dec_cmd = app.add_subcommand("decompose", "Ordinal sum decomposition of an integral chain");
  dec_cmd->add_option("file", o.file)->required();

  auto* varleq_cmd = app.add_subcommand("varleq", "Is V(A) contained in V(B)?");
  varleq_cmd->add_option("files", o.files)->required()->expected(2);

  auto* poset_cmd = app.add_subcommand("poset", "Variety inclusion poset");
  poset_cmd->add_option("files", o.files)->required();
  poset_cmd->add_option("--dot", o.dot_path, "Write the Hasse diagram as DOT");

  auto* enum_cmd = app.add_subcommand("enumerate", "All residuated lattices of a size");
  enum_cmd->add_option("--size", o.size)->required();
  enum_cmd->add_flag("--commutative", o.commutative);
  enum_cmd->add_flag("--integral", o.integral);
  enum_cmd->add_flag("--chain", o.chain);
  enum_cmd->add_flag("--count-only", o.count_only);
  enum_cmd->add_option("--out", o.out_dir, "Directory for one JSON file per algebra");
  enum_cmd->add_option("--pred", o.pred, "Property expression filter");
  enum_cmd->add_option("--cap", o.cap, "Size cap");

  auto* find_cmd = app.add_subcommand("find", "Smallest algebra satisfying a property expression");
  find_cmd->add_option("--size-max", o.size_max)->required();
  find_cmd->add_option("--pred", o.pred)->required();
  find_cmd->add_flag("--commutative", o.commutative);
  find_cmd->add_flag("--integral", o.integral);
  find_cmd->add_flag("--chain", o.chain);
  find_cmd->add_option("-o,--out", o.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalid;
  }

  try {
    if (validate_cmd->parsed()) return do_validate(o, out, err);
    if (build_cmd->parsed()) return do_build(o, out);
    if (check_cmd->parsed()) return do_check(o, out);
    if (props_cmd->parsed()) return do_props(o, out);
    if (cong_cmd->parsed()) return do_congruences(o, out);
    if (dec_cmd->parsed()) return do_decompose(o, out);
    if (varleq_cmd->parsed()) return do_varleq(o, out);
    if (poset_cmd->parsed()) return do_poset(o, out);
    if (enum_cmd->parsed()) return do_enumerate(o, out);
    if (find_cmd->parsed()) return do_find(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace reslat::cli
