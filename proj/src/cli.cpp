#include "cfrac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cfrac/errors.hpp"
#include "cfrac/function_model.hpp"
#include "cfrac/operator_algebra.hpp"
#include "cfrac/operators.hpp"
#include "cfrac/selftest.hpp"
#include "cfrac/text.hpp"

namespace cfrac::cli {
namespace {

struct EvalOptions {
  std::string op;
  std::string fn;
  std::string x0 = "0";
  std::optional<double> at;
  std::string grid;
  std::string method = "both";
  int degree = quad::QuadConfig{}.degree;
  double rel_tol = quad::QuadConfig{}.rel_tol;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;
};

double parse_lower_limit(const std::string& s) {
  if (s == "-inf") return kMinusInfinity;
  text::Cursor in(s);
  const double v = in.read_float();
  if (!in.at_end()) in.fail("trailing characters in --x0");
  return v;
}

Method parse_method(const std::string& s) {
  if (s == "closed") return Method::Closed;
  if (s == "numeric") return Method::Numeric;
  return Method::Both;
}

std::string field(const std::optional<double>& v) {
  return v ? text::format_double(*v) : std::string();
}

bool has_value(const EvalResult& r) {
  return r.status == EvalStatus::Ok || r.status == EvalStatus::ConvergenceError;
}

void write_csv(std::ostream& out, const std::vector<EvalResult>& rows, bool both) {
  out << "x,re,im";
  if (both) out << ",ref_re,ref_im,abs_err,rel_err,status";
  out << '\n';
  for (const auto& r : rows) {
    out << text::format_double(r.x) << ',';
    if (has_value(r)) {
      out << text::format_double(r.value.real()) << ',' << text::format_double(r.value.imag());
    } else {
      out << ',';
    }
    if (both) {
      const auto ref_re = r.reference ? std::optional(r.reference->real()) : std::nullopt;
      const auto ref_im = r.reference ? std::optional(r.reference->imag()) : std::nullopt;
      out << ',' << field(ref_re) << ',' << field(ref_im) << ',' << field(r.abs_err) << ','
          << field(r.rel_err) << ',' << to_string(r.status);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<EvalResult>& rows, bool both) {
  using Json = nlohmann::ordered_json;
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  Json doc = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["x"] = r.x;
    row["re"] = has_value(r) ? Json(r.value.real()) : Json(nullptr);
    row["im"] = has_value(r) ? Json(r.value.imag()) : Json(nullptr);
    if (both) {
      row["ref_re"] = r.reference ? Json(r.reference->real()) : Json(nullptr);
      row["ref_im"] = r.reference ? Json(r.reference->imag()) : Json(nullptr);
      row["abs_err"] = opt(r.abs_err);
      row["rel_err"] = opt(r.rel_err);
      row["status"] = to_string(r.status);
    }
    doc.push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

int run_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<EvalResult> rows;
  const Method method = parse_method(o.method);
  try {
    const double x0 = parse_lower_limit(o.x0);
    const OperatorExpr expr = parse_operator(o.op, x0);
    const CausalFunction f = parse_function(o.fn, x0);
    std::vector<double> xs = o.at ? std::vector<double>{*o.at} : parse_grid(o.grid);

    quad::QuadConfig cfg;
    cfg.degree = o.degree;
    cfg.rel_tol = o.rel_tol;
    if (cfg.max_degree < cfg.degree) cfg.max_degree = cfg.degree;
    rows = apply(expr, f, xs, method, cfg);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << '\n';
      return kDomainError;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  const bool both = method == Method::Both;
  if (o.format == "json") {
    write_json(sink, rows, both);
  } else {
    write_csv(sink, rows, both);
  }

  int code = kOk;
  for (const auto& r : rows) {
    if (r.status == EvalStatus::DomainError || r.status == EvalStatus::Unsupported) {
      if (!r.message.empty()) err << "x=" << text::format_double(r.x) << ": " << r.message << '\n';
      code = kDomainError;
    } else if (r.status == EvalStatus::ConvergenceError && code == kOk) {
      err << "x=" << text::format_double(r.x) << ": " << r.message << '\n';
      code = kConvergenceError;
    }
  }
  return code;
}

// CLI11 would read "-inf" as an option name; glue it to its flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--x0" || args[i] == "--at";
    if (takes_value && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<double> parse_grid(const std::string& grid) {
  text::Cursor in(grid);
  const double a = in.read_float();
  in.expect(":");
  const double b = in.read_float();
  in.expect(":");
  const std::size_t n_at = (in.skip_ws(), in.offset());
  const double n = in.read_float();
  if (!in.at_end()) in.fail("trailing characters in grid");
  if (n < 1.0 || n != std::floor(n) || n > 1e7) {
    throw ParseError(n_at, "grid point count must be a positive integer");
  }
  const auto count = static_cast<std::size_t>(n);
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) xs.back() = b;
  return xs;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex-order fractional integrals and derivatives", "cfrac"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Apply an operator chain to a function");
  eval_cmd->add_option("--op", eval.op, "Operator chain, e.g. \"D^(0.5).J^(1+1i)\"")->required();
  eval_cmd->add_option("--fn", eval.fn, "Function expression, e.g. \"x^(1+1i)\"")->required();
  eval_cmd->add_option("--x0", eval.x0, "Lower limit (float or -inf)");
  auto* at_opt = eval_cmd->add_option("--at", eval.at, "Single evaluation point");
  auto* grid_opt = eval_cmd->add_option("--grid", eval.grid, "Grid a:b:n, endpoints inclusive");
  at_opt->excludes(grid_opt);
  eval_cmd->add_option("--method", eval.method)
      ->check(CLI::IsMember({"closed", "numeric", "both"}));
  eval_cmd->add_option("--degree", eval.degree, "Initial Chebyshev degree")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--rel-tol", eval.rel_tol, "Quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember({"csv", "json"}));
  eval_cmd->add_option("--out", eval.out_path, "Write the table to this file");
  eval_cmd->add_option("--seed", eval.seed, "Accepted for symmetry with selftest");

  selftest::Options st;
  auto* st_cmd = app.add_subcommand("selftest", "Run the built-in invariant suite");
  st_cmd->add_option("--filter", st.filter, "Only checks whose name contains this text");
  st_cmd->add_option("--seed", st.seed, "Seed for the random cases");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kParseError;
  }

  if (eval_cmd->parsed()) {
    if (!eval.at && eval.grid.empty()) {
      err << "error: one of --at or --grid is required\n";
      return kParseError;
    }
    return run_eval(eval, out, err);
  }

  const auto results = selftest::run(st);
  selftest::print_table(out, results);
  if (results.empty()) {
    err << "error: no check matches filter '" << st.filter << "'\n";
    return kParseError;
  }
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cfrac::cli
