#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "umbral/errors.hpp"
#include "umbral/fock.hpp"
#include "umbral/kernels.hpp"
#include "umbral/specfun.hpp"
#include "umbral/verify.hpp"

namespace umbral::cli {

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

struct Options {
  // eval
  std::string function;
  std::string order;
  std::optional<double> x;
  std::string convention = "analytic";
  bool literal = false;
  // verify
  std::string suite = "all";
  std::uint64_t seed = 7;
  std::int64_t trunc_K = 0;
  int fock_N = 60;
  // table
  std::string kind = "orthogonality";
  int max_order = 5;
  // shared
  std::string out;
  std::string format;
  std::optional<double> precision;
  std::string config;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::set<std::string>>& config_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"eval", {"function", "order", "x", "format", "precision", "trunc-K", "convention"}},
      {"verify", {"suite", "seed", "out", "format", "trunc-K", "fock-N", "precision"}},
      {"table", {"kind", "max-order", "format", "out", "precision"}},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::map<std::string, std::string> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    values[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return values;
}

bool flag_given(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Appends config-file values for keys the command line leaves unset.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto it = std::find_if(args.begin(), args.end(),
                               [](const std::string& a) { return config_keys().count(a) > 0; });
  if (it == args.end()) return args;
  const std::set<std::string>& allowed = config_keys().at(*it);

  std::set<std::string> known;
  for (const auto& [cmd, keys] : config_keys()) known.insert(keys.begin(), keys.end());
  for (const auto& [key, value] : read_config(path)) {
    if (known.count(key) == 0) throw UsageError("unknown config key '" + key + "'");
    if (allowed.count(key) == 0 || flag_given(args, key)) continue;
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

cplx parse_order(const std::string& text) {
  // "2.5", "2.5+1i", "-1-0.5i" or "2.5,1"
  std::string t = trim(text);
  if (t.empty()) throw UsageError("--order is required");
  try {
    const auto comma = t.find(',');
    if (comma != std::string::npos) {
      return {std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1))};
    }
    if (t.back() == 'i') {
      const std::string body = t.substr(0, t.size() - 1);
      std::size_t split = std::string::npos;
      for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
          split = i;
          break;
        }
      }
      if (split == std::string::npos) return {0.0, std::stod(body.empty() ? "1" : body)};
      const std::string im = body.substr(split);
      return {std::stod(body.substr(0, split)),
              std::stod(im == "+" ? "1" : (im == "-" ? "-1" : im))};
    }
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return {v, 0.0};
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse --order '" + text + "'");
  }
}

int integer_order(cplx s, const char* function) {
  const double r = s.real();
  if (s.imag() != 0.0 || r != std::nearbyint(r) || std::abs(r) > 1e6) {
    throw DomainError(std::string(function) + " requires an integer --order");
  }
  return static_cast<int>(r);
}

double require_x(const Options& o, const char* function) {
  if (!o.x) throw DomainError(std::string(function) + " requires --x");
  return *o.x;
}

Precision precision_from(const Options& o) {
  Precision p;
  if (const char* env = std::getenv("UMBRAL_PRECISION"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw DomainError(std::string("UMBRAL_PRECISION is not a number: ") + env);
    }
    p.rel_tol = v;
  }
  if (o.precision) p.rel_tol = *o.precision;
  p.validate();
  return p;
}

std::string show(cplx z) {
  if (z.imag() == 0.0) return format_scalar(z.real());
  return format_scalar(z.real()) + " " + format_scalar(z.imag()) + "i";
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + o.out);
  file << text;
  file.flush();
  if (!file) throw IoError("write failed for " + o.out);
}

// ---------------------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  const Precision prec = precision_from(o);
  const cplx s = parse_order(o.order);
  const std::int64_t K = o.trunc_K > 0 ? o.trunc_K : 100000;
  const MasterFunctionConfig cfg =
      o.literal ? MasterFunctionConfig::literal() : default_calibration().config;
  const Normalization conv = o.convention == "dual" ? Normalization::Dual : Normalization::Analytic;
  if (o.convention != "dual" && o.convention != "analytic") {
    throw DomainError("--convention must be analytic or dual");
  }

  cplx value;
  double bound = 0.0;
  const std::string& f = o.function;
  if (f == "B") {
    value = analytic_B(s, CirclePoint(require_x(o, "B")), cfg, prec);
    bound = prec.rel_tol * std::abs(value);
  } else if (f == "A") {
    value = analytic_A(s, CirclePoint(require_x(o, "A")), cfg, prec);
    bound = prec.rel_tol * std::abs(value);
  } else if (f == "Fstar") {
    value = master_F(s, CirclePoint(require_x(o, "Fstar")), cfg, prec);
    bound = prec.rel_tol * std::abs(value);
  } else if (f == "Btilde") {
    const KernelValue kv = periodic_bernoulli(integer_order(s, "Btilde"), CirclePoint(require_x(o, "Btilde")), K);
    value = kv.value;
    bound = kv.tail_bound;
  } else if (f == "Aclausen") {
    const KernelValue kv =
        clausen_dual(integer_order(s, "Aclausen"), CirclePoint(require_x(o, "Aclausen")), K, conv);
    value = kv.value;
    bound = kv.tail_bound;
  } else if (f == "Hermite") {
    const int m = integer_order(s, "Hermite");
    value = hermite_poly(m, require_x(o, "Hermite"));
    bound = 2.0 * (m + 1) * std::numeric_limits<double>::epsilon() * std::abs(value);
  } else if (f == "Li") {
    const CirclePoint x(require_x(o, "Li"));
    value = polylog_circle(s, x, prec);
    bound = prec.rel_tol * std::abs(value);
  } else if (f == "zeta") {
    value = riemann_zeta(s, prec);
    bound = prec.rel_tol * std::abs(value);
  } else if (f == "hurwitz") {
    value = hurwitz_zeta(s, require_x(o, "hurwitz"), prec);
    bound = prec.rel_tol * std::abs(value);
  } else {
    throw DomainError("unknown function '" + f +
                      "' (B, A, Btilde, Aclausen, Hermite, Li, zeta, hurwitz, Fstar)");
  }

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["function"] = f;
    j["order"] = {format_scalar(s.real()), format_scalar(s.imag())};
    j["x"] = o.x ? nlohmann::ordered_json(format_scalar(*o.x)) : nlohmann::ordered_json(nullptr);
    j["value"] = {format_scalar(value.real()), format_scalar(value.imag())};
    j["error_bound"] = format_scalar(bound);
    out << j.dump(2) << "\n";
  } else {
    out << "value = " << show(value) << "\n";
    out << "error_bound = " << format_scalar(bound) << "\n";
  }
  return kOk;
}

std::string summary_table(const VerificationReport& r) {
  std::map<std::string, ReportSummary> groups;
  for (const auto& c : r.checks) {
    ReportSummary& g = groups[c.name.substr(0, c.name.find('/'))];
    ++g.total;
    if (c.kind == CheckKind::Measured) ++g.measured;
    if (c.pass) {
      ++g.passed;
    } else if (c.kind == CheckKind::Asserted) {
      ++g.failed;
    }
  }
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%-16s %7s %7s %9s %7s\n", "suite", "total", "passed", "measured",
                "failed");
  os << line;
  for (const auto& [name, g] : groups) {
    std::snprintf(line, sizeof line, "%-16s %7zu %7zu %9zu %7zu\n", name.c_str(), g.total, g.passed,
                  g.measured, g.failed);
    os << line;
  }
  const ReportSummary s = r.summary();
  std::snprintf(line, sizeof line, "%-16s %7zu %7zu %9zu %7zu\n", "total", s.total, s.passed,
                s.measured, s.failed);
  os << line;
  for (const auto& c : r.checks) {
    if (!c.pass) os << "FAILED " << c.name << "\n";
  }
  return os.str();
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions so;
  so.seed = o.seed;
  so.precision = precision_from(o);
  so.trunc_K = o.trunc_K;
  so.fock_N = o.fock_N;
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw DomainError("unknown suite '" + o.suite + "'");
  }
  const VerificationReport report = run_suite(o.suite, so);
  std::string text;
  if (o.format == "csv") {
    text = to_csv(report);
  } else if (o.format == "text") {
    text = to_text(report);
  } else {
    text = to_json(report);
  }
  write_output(o, text, out);
  (o.out.empty() ? err : out) << summary_table(report);
  return report.all_asserted_pass() ? kOk : kChecksFailed;
}

std::string render_rows(const std::vector<Row>& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      for (const auto& [k, v] : row) obj[k] = v;
      arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
    return os.str();
  }
  if (rows.empty()) return "";
  for (std::size_t i = 0; i < rows[0].size(); ++i) os << (i ? "," : "") << rows[0][i].first;
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].second;
    os << "\n";
  }
  return os.str();
}

int cmd_table(const Options& o, std::ostream& out) {
  (void)precision_from(o);
  if (o.max_order < 1 || o.max_order > 8) throw DomainError("--max-order must be in [1, 8]");
  std::vector<Row> rows;
  if (o.kind == "orthogonality") {
    for (int n = 1; n <= o.max_order; ++n) {
      for (int m = 1; m <= o.max_order; ++m) {
        Row row = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
        for (PairKind kind : {PairKind::BB, PairKind::AA, PairKind::BA}) {
          const OrthogonalityEntry e = orthogonality_entry(n, m, kind);
          const std::string k = to_string(kind);
          row.emplace_back(k + "_quadrature", format_scalar(e.quadrature.value));
          row.emplace_back(k + "_closed_form", format_scalar(e.stated));
          row.emplace_back(k + "_fourier", format_scalar(e.fourier));
        }
        rows.push_back(std::move(row));
      }
    }
  } else if (o.kind == "zeta_extraction") {
    for (int n = 1; n <= o.max_order; ++n) {
      for (int m = n + 1; m <= o.max_order; ++m) {
        if ((n + m) % 2 == 0) continue;
        const CheckResult c = odd_zeta_extraction(n, m);
        rows.push_back({{"n", std::to_string(n)},
                        {"m", std::to_string(m)},
                        {"order", std::to_string(n + m)},
                        {"zeta_estimate", format_scalar(c.lhs.real())},
                        {"riemann_zeta", format_scalar(c.rhs.real())},
                        {"abs_err", format_scalar(c.abs_err)}});
      }
    }
  } else if (o.kind == "jacobi_nodes") {
    const int N = o.max_order;
    const Eigen::MatrixXd J = jacobi_matrix(N).matrix().real();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J, Eigen::EigenvaluesOnly);
    const std::vector<double> roots = hermite_roots(N);
    for (int i = 0; i < N; ++i) {
      rows.push_back({{"index", std::to_string(i)},
                      {"eigenvalue", format_scalar(solver.eigenvalues()(i))},
                      {"hermite_root", format_scalar(roots[static_cast<std::size_t>(i)])}});
    }
  } else {
    throw DomainError("unknown table kind '" + o.kind + "' (orthogonality, zeta_extraction, jacobi_nodes)");
  }
  write_output(o, render_rows(rows, o.format), out);
  return kOk;
}

void add_shared(CLI::App* cmd, Options& o, bool with_out) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--precision", o.precision, "Relative tolerance (overrides UMBRAL_PRECISION)");
  cmd->add_option("--config", o.config, "key = value file; flags win on conflict");
  if (with_out) cmd->add_option("--out", o.out, "Output path (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bernoulli/Clausen kernel identities and their verification", "umbral"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one function at a point");
  eval->add_option("--function", o.function, "B, A, Btilde, Aclausen, Hermite, Li, zeta, hurwitz, Fstar")
      ->required();
  eval->add_option("--order", o.order, "Order s (real, or complex as 2.5+1i)")->required();
  eval->add_option("--x", o.x, "Circle point in (0,1); the Hermite abscissa; the Hurwitz shift a");
  eval->add_option("--trunc-K", o.trunc_K, "Truncation for Btilde / Aclausen (default 1e5)");
  eval->add_option("--convention", o.convention, "Aclausen normalization: analytic or dual");
  eval->add_flag("--literal", o.literal, "Use the uncalibrated master function");
  add_shared(eval, o, false);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "all, specfun, kernels, operators, orthogonality, "
                                         "correspondence, ladder, fractional");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trunc-K", o.trunc_K, "Series truncation override");
  verify->add_option("--fock-N", o.fock_N, "Fock dimension for displacement checks");
  add_shared(verify, o, true);

  CLI::App* table = app.add_subcommand("table", "Emit an orthogonality, zeta or node table");
  table->add_option("--kind", o.kind, "orthogonality, zeta_extraction, jacobi_nodes");
  table->add_option("--max-order", o.max_order, "Largest order (node count for jacobi_nodes)");
  add_shared(table, o, true);

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  try {
    if (eval->parsed()) {
      if (o.format.empty()) o.format = "text";
      return cmd_eval(o, out);
    }
    if (verify->parsed()) {
      if (o.format.empty()) o.format = "json";
      return cmd_verify(o, out, err);
    }
    if (o.format.empty() || o.format == "text") o.format = "csv";
    return cmd_table(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace umbral::cli
