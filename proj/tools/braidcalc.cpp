// braidcalc command-line tool.
//
// Exit codes: 0 success, 1 an asserted check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidcalc/catalog.hpp"
#include "braidcalc/jacobi.hpp"
#include "braidcalc/report.hpp"
#include "braidcalc/rewrite.hpp"
#include "braidcalc/suites.hpp"

using namespace braidcalc;

namespace {

constexpr int kUsage = 2;

struct Source {
  std::string builtin, file;
  std::string m, hbar, q, range, braiding;
  std::vector<std::string> params;

  void add_options(CLI::App* cmd, bool allow_file) {
    auto* b = cmd->add_option("--builtin", builtin, "built-in algebra");
    if (allow_file) {
      auto* f = cmd->add_option("--file", file, "algebra file (JSON)");
      b->excludes(f);
    }
    cmd->add_option("--m", m, "matrix size");
    cmd->add_option("--hbar", hbar, "deformation parameter");
    cmd->add_option("--q", q, "value of q");
    cmd->add_option("--range", range, "index range a..b");
    cmd->add_option("--braiding", braiding, "hecke or flip");
    cmd->add_option("--param", params, "other builtin parameter, key=value");
  }

  BuiltinArgs args() const {
    BuiltinArgs out;
    auto put = [&](const char* key, const std::string& v) {
      if (!v.empty()) out[key] = v;
    };
    put("m", m);
    put("hbar", hbar);
    put("q", q);
    put("range", range);
    put("braiding", braiding);
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) throw Error("--param expects key=value, got '" + p + "'");
      out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
  }

  AlgebraPresentation load() const {
    if (!file.empty()) {
      if (!args().empty()) throw Error("parameter flags apply to --builtin only");
      return load_algebra_file(file);
    }
    if (builtin.empty()) throw Error("one of --builtin or --file is required");
    AlgebraPresentation p = builtin_algebra();
    p.validate();
    return p;
  }

  AlgebraPresentation builtin_algebra() const { return braidcalc::builtin(builtin, args()); }
};

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int cmd_verify(const std::string& suite, const std::string& json_path, bool timing, int threads) {
  if (!is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'; expected one of:";
    for (const auto& s : suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return kUsage;
  }
  SuiteOptions opts;
  opts.timing = timing;
  opts.threads = threads > 0 ? threads : threads_from_env();
  SuiteReport report = run_suite(suite, opts);
  if (json_path == "-") {
    std::cout << report.to_json();
  } else {
    std::cout << report.to_text();
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw Error("cannot write '" + json_path + "'");
      out << report.to_json();
    }
  }
  return report.ok() ? 0 : 1;
}

int cmd_dims(const Source& src, int degree) {
  if (degree < 0 || degree > 6) throw Error("--degree must be in [0, 6]");
  AlgebraPresentation p = src.load();
  DimReport r = pbw_check(p, degree);
  std::cout << "algebra:   " << p.name << "\n"
            << "quadratic: " << format_dims(r.quadratic) << "\n"
            << "graded:    " << format_dims(r.graded) << "\n"
            << "verdict:   " << (r.pass ? "pass" : "fail") << "\n";
  return 0;
}

int cmd_act(const Source& src, const std::string& deriv, const std::string& word) {
  if (src.builtin.empty()) throw Error("act needs --builtin");
  WeylEngine e(builtin_weyl(src.builtin, src.args()));
  const WeylPresentation& w = e.presentation();
  Word dword, aword;
  for (const auto& name : split_words(deriv)) {
    int i = w.B.generator_index(name);
    if (i < 0) i = w.B.generator_index("d" + name);
    if (i < 0) throw Error("unknown derivative '" + name + "'");
    dword.push_back(i);
  }
  if (dword.empty()) throw Error("--deriv is empty");
  for (const auto& name : split_words(word)) {
    if (name == "1") continue;
    int i = w.A.generator_index(name);
    if (i < 0) throw Error("unknown generator '" + name + "'");
    aword.push_back(i);
  }
  Tensor out = e.reduce_a(e.apply(dword, Tensor(aword)));
  std::cout << out.to_string(w.A.namer(), w.A.symbol) << "\n";
  return 0;
}

int cmd_check(const Source& src) {
  AlgebraPresentation p = src.load();
  BracketData d = bracket_from_presentation(p);
  auto [c1, c2] = check_pp(d);
  std::vector<ConditionReport> reports = {c1, c2};
  if (d.beta)
    for (auto& r : check_bg(d)) reports.push_back(std::move(r));
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.id << ": " << to_string(r.status);
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    if (!r.witness.is_zero()) std::cout << "\n  witness " << r.witness.to_string(p.namer(), p.symbol);
    std::cout << "\n";
    ok = ok && !r.failed();
  }
  return ok ? 0 : 1;
}

int cmd_export(const Source& src) {
  std::cout << serialize_algebra(src.load());
  return 0;
}

int cmd_list() {
  for (const auto& b : builtin_catalog()) {
    std::cout << b.name << "  " << b.summary << "\n    parameters:";
    for (const auto& p : b.parameters) std::cout << " " << p;
    if (b.has_weyl) std::cout << "; has derivatives";
    std::cout << "\n";
  }
  std::cout << "suites:";
  for (const auto& s : suite_names()) std::cout << " " << s;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quadratic-linear algebras and braided calculi"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string suite, json_path;
  bool timing = false;
  int threads = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "gl, u2, braided, witt, families, weyl2d or all")->required();
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  verify->add_flag("--timing", timing, "record per-check runtimes");
  verify->add_option("--threads", threads, "worker threads (default BRAIDCALC_THREADS or 1)");

  Source dims_src;
  int degree = 3;
  auto* dims = app.add_subcommand("dims", "graded dimensions of the quadratic part and the associated graded");
  dims_src.add_options(dims, true);
  dims->add_option("--degree", degree, "top degree, at most 6");

  Source act_src;
  std::string deriv, word;
  auto* act = app.add_subcommand("act", "apply derivatives to a monomial");
  act_src.add_options(act, false);
  act->add_option("--deriv", deriv, "derivative generator(s)")->required();
  act->add_option("--word", word, "monomial, e.g. \"x y\"")->required();

  Source check_src;
  auto* check = app.add_subcommand("check", "Jacobi-PP and BG conditions of a presentation");
  check_src.add_options(check, true);

  Source export_src;
  auto* exp = app.add_subcommand("export", "print the canonical algebra file");
  export_src.add_options(exp, true);

  auto* list = app.add_subcommand("list", "list built-in algebras and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, json_path, timing, threads);
    if (*dims) return cmd_dims(dims_src, degree);
    if (*act) return cmd_act(act_src, deriv, word);
    if (*check) return cmd_check(check_src);
    if (*exp) return cmd_export(export_src);
    if (*list) return cmd_list();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
