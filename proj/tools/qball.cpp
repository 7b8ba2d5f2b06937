// qball: normalize expressions and run the verification suites.
//
// Exit codes: 0 PASS, 1 FAIL, 2 usage/parse/input error, 3 SKIPPED only.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "qball/error.hpp"
#include "qball/parse.hpp"
#include "qball/suites.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_skipped = 3;

std::optional<mpq_class> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpq_class v;
  if (v.set_str(s, 10) != 0 || v.get_den() == 0) {
    throw qball::Error(qball::ErrorKind::parse, "not a rational: " + s);
  }
  v.canonicalize();
  return v;
}

void print_report(const qball::Report& r) {
  std::cout << r.suite << " n=" << r.n << " cutoff=" << r.cutoff << ": " << qball::to_string(r.status)
            << " (residuals " << r.residual_count << ", " << r.wall_ms << " ms"
            << (r.truncated ? ", truncated" : "") << ")\n";
  for (const std::string& s : r.residual_sample) std::cout << "  residual: " << s << '\n';
  for (const std::string& s : r.notes) std::cout << "  note: " << s << '\n';
}

int verdict(const std::vector<qball::Report>& reports) {
  bool any_pass = false;
  for (const auto& r : reports) {
    if (r.status == qball::Status::fail) return exit_fail;
    if (r.status == qball::Status::pass) any_pass = true;
  }
  return any_pass ? exit_pass : exit_skipped;
}

void write_json(const std::vector<qball::Report>& reports, const std::string& path) {
  nlohmann::ordered_json j;
  if (reports.size() == 1) {
    j = qball::to_json(reports.front());
  } else {
    j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(qball::to_json(r));
  }
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw qball::Error(qball::ErrorKind::io, "cannot write " + path);
}

std::string specialize(const qball::ParsedExpr& e, const mpq_class& v) {
  if (!e.algebra) return e.value.scalar_part().eval(v).get_str();
  std::string out;
  for (const auto& [w, c] : e.value) {
    const mpq_class x = c.eval(v);
    if (x == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + x.get_str() + ")";
    if (!w.empty()) out += "*" + e.algebra->render_word(w);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum matrix ball: normalization and identity verification"};
  app.require_subcommand(1);

  int n = 1;
  int cutoff = 1;
  std::string eval_v;
  std::string output;
  std::string expr;
  std::vector<std::string> suites;

  auto* normalize = app.add_subcommand("normalize", "Parse an expression and print its normal form");
  normalize->add_option("expr", expr, "Expression, e.g. \"z[1,2]*z[1,1]\"")->required();
  normalize->add_option("--n", n, "Matrix size")->check(CLI::PositiveNumber);
  normalize->add_option("--eval-v", eval_v, "Also print coefficients specialized at v = V");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> choices = qball::suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suites, "Suite name(s), or all")->required()->check(CLI::IsMember(choices));
  verify->add_option("--n", n, "Matrix size")->check(CLI::PositiveNumber);
  verify->add_option("--cutoff", cutoff, "Bidegree cutoff D")->check(CLI::NonNegativeNumber);
  verify->add_option("--eval-v", eval_v, "Rational point for the specialized cross-check");
  verify->add_option("--output", output, "Write the JSON report here (- for stdout)");

  auto* limits = app.add_subcommand("limits", "Compare with the classical v = 1 formulas");
  limits->add_option("--n", n, "Matrix size")->check(CLI::PositiveNumber);
  limits->add_option("--cutoff", cutoff, "Bidegree cutoff D")->check(CLI::NonNegativeNumber);
  limits->add_option("--output", output, "Write the JSON report here (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*normalize) {
      const qball::ParsedExpr e = qball::parse_expr(expr, n);
      std::cout << qball::render(e) << '\n';
      if (const auto v = parse_rational(eval_v)) std::cout << "at v = " << v->get_str() << ": " << specialize(e, *v) << '\n';
      return exit_pass;
    }
    qball::SuiteOptions opt;
    opt.n = n;
    opt.cutoff = cutoff;
    opt.eval_v = parse_rational(eval_v);
    std::vector<qball::Report> reports;
    if (*verify) {
      reports = qball::run_suites(suites, opt, qball::default_threads());
    } else {
      reports.push_back(qball::run_suite("limits", opt));
    }
    if (output != "-") {
      for (const auto& r : reports) print_report(r);
    }
    if (!output.empty()) write_json(reports, output);
    return verdict(reports);
  } catch (const qball::Error& e) {
    std::cerr << "error (" << qball::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_usage;
  }
}
