#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "menv/center.hpp"
#include "menv/document.hpp"
#include "menv/evaluate.hpp"
#include "menv/verify.hpp"

using namespace menv;

namespace {

enum Exit { kOk = 0, kEvalError = 1, kParseError = 2, kVerifyFailed = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expr;
  std::string gamma;
  std::string engine = "closed";
  std::string format = "text";
  std::string in, out;
  std::string suite;
  std::optional<unsigned> max_exp;
  unsigned max_degree = 0;
  unsigned degree = 0;
  bool a_free = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text << '\n';
}

void report_parse_error(const ParseError& e, const std::string& input) {
  std::cerr << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
}

GammaMode mode_from(const std::string& text, const GammaMode& fallback = GammaMode::symbolic()) {
  if (text.empty()) return fallback;
  try {
    return GammaMode::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad --gamma: ") + e.what());
  }
}

int run_eval(const Options& o) {
  if (o.expr.empty() == o.in.empty()) throw InputError("eval takes either an expression or --in FILE");
  Element value;
  GammaMode mode = GammaMode::symbolic();
  if (!o.in.empty()) {
    ElementDocument doc = deserialize(read_file(o.in));
    mode = mode_from(o.gamma, doc.gamma);
    if (!doc.gamma.is_symbolic() && !(mode == doc.gamma))
      throw std::domain_error("document is fixed at gamma = " + doc.gamma.to_string());
    value = mode.is_symbolic() ? doc.element : gamma_eval(doc.element, mode.value());
  } else {
    mode = mode_from(o.gamma);
    value = evaluate(parse_expr(o.expr), parse_engine(o.engine), mode);
  }
  if (!o.out.empty()) write_file(o.out, serialize(value, mode));
  std::cout << (o.format == "json" ? serialize(value, mode) : to_string(value)) << '\n';
  return kOk;
}

int run_alt_eval(const Options& o) {
  const GammaMode mode = mode_from(o.gamma);
  const AltElement value = evaluate_alt(parse_expr(o.expr), mode);
  if (!o.out.empty()) write_file(o.out, serialize(lift(value), mode));
  std::cout << (o.format == "json" ? serialize(lift(value), mode) : to_string(value)) << '\n';
  return kOk;
}

int run_center(const Options& o) {
  const GammaMode mode = mode_from(o.gamma);
  const auto basis = center_search(o.max_degree, mode, CenterSearchOptions{o.a_free});
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["gamma"] = mode.to_string();
    doc["max_degree"] = o.max_degree;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& n : basis) list.push_back(to_json(n, mode));
    doc["basis"] = std::move(list);
    if (!mode.is_symbolic()) {
      const auto gen = center_generator(mode.value());
      doc["generator"] = gen ? nlohmann::ordered_json(gen->exps) : nlohmann::ordered_json(nullptr);
    }
    std::cout << doc.dump() << '\n';
    return kOk;
  }
  for (const auto& n : basis) std::cout << to_string(n) << '\n';
  return kOk;
}

int run_verify(const Options& o) {
  SuiteBounds bounds = SuiteBounds::from_environment();
  if (o.max_exp) bounds.override_all(*o.max_exp);
  bool ok = true;
  for (const auto& r : run_suites(o.suite, bounds)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerifyFailed;
}

int run_table(const Options& o) {
  const GammaMode mode = mode_from(o.gamma);
  Evaluator evaluator(parse_engine(o.engine));
  const auto monos = monomials_up_to_degree(o.degree);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& x : monos)
    for (const auto& z : monos) {
      Element p = evaluator.multiply(x, z);
      if (!mode.is_symbolic()) p = gamma_eval(p, mode.value());
      if (o.format == "json") {
        nlohmann::ordered_json row;
        row["left"] = x.exps;
        row["right"] = z.exps;
        row["product"] = to_json(p, mode);
        rows.push_back(std::move(row));
      } else {
        std::cout << '(' << to_string(x) << ") * (" << to_string(z) << ") = " << to_string(p) << '\n';
      }
    }
  if (o.format == "json") std::cout << rows.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the enveloping algebras of the Malcev algebras M_gamma"};
  app.require_subcommand(1);
  Options o;

  const auto add_gamma = [&o](CLI::App* cmd) {
    cmd->add_option("--gamma", o.gamma, "rational l/m (nonzero) or 'symbolic'");
  };
  const auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_engine = [&o](CLI::App* cmd) {
    cmd->add_option("--engine", o.engine, "product engine")->check(CLI::IsMember({"closed", "operator", "oracle"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate an expression in U(M_gamma)");
  eval->add_option("expr", o.expr, "expression, e.g. \"assoc(c, (a*b), (a*b))\"");
  add_gamma(eval);
  add_engine(eval);
  add_format(eval);
  eval->add_option("--in", o.in, "read the value from an element document instead");
  eval->add_option("--out", o.out, "also write the result as an element document");

  auto* center = app.add_subcommand("center", "basis of the center up to a degree");
  center->add_option("--gamma", o.gamma, "rational l/m (nonzero) or 'symbolic'")->required();
  center->add_option("--max-degree", o.max_degree, "total degree bound")->required();
  center->add_flag("--a-free", o.a_free, "search only monomials without a");
  add_format(center);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"oracle", "nalt", "malcev", "alt", "small", "all"}));
  verify->add_option("--max-exp", o.max_exp, "sweep bound (overrides MENV_MAX_EXP)");

  auto* alt = app.add_subcommand("alt", "the universal alternative quotient A(M_gamma)");
  alt->require_subcommand(1);
  auto* alt_eval = alt->add_subcommand("eval", "evaluate an expression in A(M_gamma)");
  alt_eval->add_option("expr", o.expr, "expression")->required();
  add_gamma(alt_eval);
  add_format(alt_eval);
  alt_eval->add_option("--out", o.out, "also write the coset representative as an element document");

  auto* table = app.add_subcommand("table", "all products of monomials up to a degree");
  table->add_option("--degree", o.degree, "total degree bound")->required();
  add_gamma(table);
  add_engine(table);
  add_format(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*eval) return run_eval(o);
    if (*center) return run_center(o);
    if (*verify) return run_verify(o);
    if (*alt_eval) return run_alt_eval(o);
    if (*table) return run_table(o);
  } catch (const ParseError& e) {
    report_parse_error(e, o.expr);
    return kParseError;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEvalError;
  }
  return kOk;
}
