#include "coquat_tools/cli.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coquat/bench.hpp"
#include "coquat/error.hpp"
#include "coquat/expr.hpp"
#include "coquat_tools/acceptance.hpp"

namespace coquat::cli {
namespace {

constexpr int kOk = 0;
constexpr int kEvalError = 1;
constexpr int kUsage = 2;

constexpr const char* kReplHelp =
    "Enter an expression per line, e.g. (1+2i+j)^3 or polar(1+2j).\n"
    "Functions: classify conj exp inv iq lexp lpow matl matr norm normalize polar pow powc rexp rpow\n"
    "Commands: :help, :quit\n";

int eval_command(const std::string& src, bool json, std::ostream& out, std::ostream& err) {
  const expr::LineResult r = expr::evaluate_line(src);
  if (r.ok) {
    out << (json ? expr::render_json(r.value) : expr::render_text(r.value)) << '\n';
    return kOk;
  }
  if (json) out << expr::render_error_json(r) << '\n';
  err << expr::format_diagnostic(src, r);
  return kEvalError;
}

int repl_command(std::istream& in, std::ostream& out, bool prompt) {
  std::string line;
  for (;;) {
    if (prompt) out << "coquat> " << std::flush;
    if (!std::getline(in, line)) break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::string cmd = line.substr(first);
    if (cmd == ":quit" || cmd == ":q") break;
    if (cmd == ":help") {
      out << kReplHelp;
      continue;
    }
    const expr::LineResult r = expr::evaluate_line(line);
    if (r.ok) {
      out << expr::render_text(r.value) << '\n';
    } else {
      out << expr::format_diagnostic(line, r);
    }
  }
  if (prompt) out << '\n';
  return kOk;
}

int bench_command(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  const BenchReport report = bench_pow(cfg);
  out << bench_csv(report);
  bool ok = true;
  for (const BenchRow& row : report.rows) {
    if (row.method == "closed" && row.overflowed > 0) {
      err << "n=" << row.n << ": " << row.overflowed << " of " << cfg.reps
          << " samples left the doubles (flagged as overflow, excluded from max_abs_diff)\n";
    }
    ok = ok && row.pass;
  }
  if (report.resampled > 0) err << "resampled " << report.resampled << " lightlike or undecomposable draws\n";
  return ok ? kOk : kEvalError;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
  CLI::App app{"Split-quaternion calculator: algebra, polar forms, matrix representations, De Moivre powers"};
  app.name("coquat");
  app.require_subcommand(1);

  std::string source;
  bool json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate one expression");
  eval->add_option("expr", source, "Expression, e.g. \"(1+2i+j)^3\"");
  eval->add_flag("--json", json, "Print the result as JSON");
  eval->allow_extras();

  auto* repl = app.add_subcommand("repl", "Read-evaluate-print loop (:help, :quit)");

  BenchConfig bench_cfg;
  if (const char* env = std::getenv("COQUAT_SEED")) {
    try {
      bench_cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: COQUAT_SEED must be a non-negative integer\n";
      return kUsage;
    }
  }
  auto* bench = app.add_subcommand("bench", "Time closed-form vs naive matrix powers (CSV)");
  bench->add_option("--n", bench_cfg.n_values, "Exponents, comma separated")->delimiter(',');
  bench->add_option("--reps", bench_cfg.reps, "Samples per exponent")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_cfg.seed, "Random seed (default 42, or COQUAT_SEED)");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      // Expressions starting with '-' land in the extras.
      const auto extras = eval->remaining();
      for (const std::string& piece : extras) {
        if (piece != "--") source += (source.empty() ? "" : " ") + piece;
      }
      if (source.empty()) {
        err << "error: eval needs an expression\n";
        return kUsage;
      }
      return eval_command(source, json, out, err);
    }
    if (repl->parsed()) return repl_command(in, out, prompt);
    if (bench->parsed()) {
      for (auto n : bench_cfg.n_values) {
        if (n <= 0) {
          err << "error: --n values must be positive\n";
          return kUsage;
        }
      }
      return bench_command(bench_cfg, out, err);
    }
    if (selftest->parsed()) {
      return acceptance::report(acceptance::run_all(), out) ? kOk : kEvalError;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kEvalError;
  }
  return kUsage;
}

}  // namespace coquat::cli
