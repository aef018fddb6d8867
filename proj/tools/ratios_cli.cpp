// Command-line front end: verification suites, identity scans, correlation
// scans, mean-value comparisons, singular-series tables.  All output goes
// through ReportTable (CSV or JSON) and is byte-deterministic for a fixed
// configuration.
//
// Exit codes: 0 success, 1 suite failure, 2 invalid configuration,
// 3 computational-range error.

#include <algorithm>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratios/core.hpp"
#include "ratios/correlations.hpp"
#include "ratios/dirichlet.hpp"
#include "ratios/meanvalue.hpp"
#include "ratios/prime_table.hpp"
#include "ratios/report_io.hpp"
#include "ratios/selftest.hpp"

namespace {

using namespace ratios;

// "a" or "a+bi" (also "a-bi"); exponents allowed in either part.
Cplx parse_complex(const std::string& raw, const std::string& flag) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw RangeError(flag + ": empty value");
  auto parse_real = [&](const std::string& t) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw RangeError(flag + ": cannot parse '" + raw + "'");
    }
    if (pos != t.size()) throw RangeError(flag + ": cannot parse '" + raw + "'");
    return v;
  };
  if (s.back() != 'i') return Cplx(parse_real(s), 0.0);
  std::string body = s.substr(0, s.size() - 1);
  // split at the last +/- that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw RangeError(flag + ": expected 'a+bi', got '" + raw + "'");
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return Cplx(parse_real(body.substr(0, split)), parse_real(im));
}

struct RunConfig {
  std::string alpha_s = "0.1", beta_s = "-0.05", gamma_s = "0.05",
              delta_s = "0.08";
  std::int64_t x = 10000;
  std::int64_t h_max = 100;
  std::vector<double> T_list;
  double lambda = 1.1;
  double sigma = 0.05;
  double center = 1.0;
  long long primes_cutoff = 100000;
  long long series_cutoff = 1000000;
  long long q_cutoff = 10000;
  double tol = 0.0;  // 0 = per-suite defaults
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 12345;

  ShiftParams shifts() const {
    return ShiftParams(parse_complex(alpha_s, "--alpha"),
                       parse_complex(beta_s, "--beta"),
                       parse_complex(gamma_s, "--gamma"),
                       parse_complex(delta_s, "--delta"));
  }

  TruncationConfig truncation() const {
    TruncationConfig c;
    c.prime_cutoff = primes_cutoff;
    c.series_cutoff = series_cutoff;
    c.modulus_cutoff = q_cutoff;
    return c;
  }

  void echo(ReportTable& t, const ShiftParams& sh) const {
    t.add_meta("alpha", sh.alpha);
    t.add_meta("beta", sh.beta);
    t.add_meta("gamma", sh.gamma);
    t.add_meta("delta", sh.delta);
    t.add_meta("primes_cutoff", primes_cutoff);
    t.add_meta("series_cutoff", series_cutoff);
    t.add_meta("q_cutoff", q_cutoff);
    t.add_meta("seed", static_cast<long long>(seed));
    t.add_meta("format", format);
  }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha_s, "shift alpha ('a' or 'a+bi')");
  cmd->add_option("--beta", cfg.beta_s, "shift beta");
  cmd->add_option("--gamma", cfg.gamma_s, "shift gamma");
  cmd->add_option("--delta", cfg.delta_s, "shift delta");
  cmd->add_option("--primes-cutoff", cfg.primes_cutoff,
                  "Euler product exact head cutoff P");
  cmd->add_option("--series-cutoff", cfg.series_cutoff,
                  "Dirichlet sum truncation N");
  cmd->add_option("--q-cutoff", cfg.q_cutoff, "modulus sum truncation Q");
  cmd->add_option("--tol", cfg.tol, "property-suite threshold override");
  cmd->add_option("--out", cfg.out, "output path ('-' = stdout)");
  cmd->add_option("--format", cfg.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", cfg.seed, "seed for sampled suites");
}

// Fail-fast checks beyond what the option parser sees, each naming its flag.
void validate(const RunConfig& cfg, const std::string& sub) {
  (void)cfg.shifts();  // throws with magnitude if out of the admissible box
  cfg.truncation().validate();
  if (cfg.tol < 0.0) throw RangeError("--tol: must be >= 0");
  if (sub == "correlations") {
    if (cfg.x < 100 || cfg.x > 50000000)
      throw RangeError("--x: must lie in [100, 5e7]");
    if (cfg.h_max < 1) throw RangeError("--h-max: must be >= 1");
    if (static_cast<double>(cfg.h_max) >
        std::sqrt(static_cast<double>(cfg.x)))
      throw RangeError("--h-max: exceeds the sqrt(x) scan policy");
  }
  if (sub == "singular-series" && cfg.h_max < 1)
    throw RangeError("--h-max: must be >= 1");
  if (sub == "meanvalue") {
    if (!(cfg.lambda > 0.0 && cfg.lambda <= 2.0))
      throw RangeError("--lambda: must lie in (0, 2]");
    TestFunction f(cfg.center, cfg.sigma);  // throws naming the constraint
    (void)f;
    for (double T : cfg.T_list) {
      if (T < 100.0) throw RangeError("--T: values must be >= 100");
      if (static_cast<double>(meanvalue_X(T, cfg.lambda)) > 5e7)
        throw RangeError("--T: T^lambda exceeds the 5e7 sieve budget");
    }
  }
}

int cmd_selftest(const RunConfig& cfg) {
  PrimeTable table = build_table(1000000);
  auto results = run_selftest(table, cfg.seed, cfg.tol);
  ReportTable t;
  t.add_meta("subcommand", std::string("selftest"));
  t.add_meta("seed", static_cast<long long>(cfg.seed));
  t.add_meta("tol_override", cfg.tol);
  t.columns = {"suite", "pass", "worst_residual", "threshold", "detail"};
  for (const auto& r : results)
    t.rows.push_back({r.name, r.pass, r.worst, r.threshold, r.detail});
  write_report(cfg.out, cfg.format, t);
  for (const auto& r : results)
    if (!r.pass) {
      std::fprintf(stderr, "selftest: suite '%s' failed (%.3g >= %.3g)\n",
                   r.name.c_str(), r.worst, r.threshold);
      return 1;
    }
  return 0;
}

int cmd_identities(const RunConfig& cfg) {
  ShiftParams base = cfg.shifts();
  TruncationConfig tc = cfg.truncation();
  PrimeTable table = build_table(std::max<long long>(tc.prime_cutoff, 1000));
  std::vector<Cplx> s_grid = {Cplx(0.0),        Cplx(0.05),
                              Cplx(-0.04, 0.03), Cplx(0.0, 0.1),
                              Cplx(0.08, -0.06)};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  std::vector<ShiftParams> draws = {base};
  for (int i = 0; i < 4; ++i)
    draws.emplace_back(Cplx(u(rng), u(rng)), Cplx(u(rng), u(rng)),
                       Cplx(u(rng), u(rng)), Cplx(u(rng), u(rng)));

  ReportTable t;
  t.add_meta("subcommand", std::string("identities"));
  cfg.echo(t, base);
  t.columns = {"s",          "alpha",      "beta",
               "gamma",      "delta",      "qsum",
               "stated",     "section4",   "rel_error_stated",
               "rel_error_section4", "degenerate"};
  bool s0_ok = true;
  for (const auto& sh : draws) {
    for (Cplx s : s_grid) {
      auto rep = theorem1_check(s, sh, tc, table);
      t.rows.push_back({rep.s, sh.alpha, sh.beta, sh.gamma, sh.delta, rep.qsum,
                        rep.reading_stated, rep.reading_section4,
                        rep.vs_stated.rel_error, rep.vs_section4.rel_error,
                        rep.degenerate});
      if (std::abs(s) < 1e-15 && !rep.degenerate &&
          rep.vs_stated.rel_error >= 1e-8)
        s0_ok = false;
    }
  }
  write_report(cfg.out, cfg.format, t);
  if (!s0_ok) std::fprintf(stderr, "identities: s = 0 gate failed\n");
  return s0_ok ? 0 : 1;
}

int cmd_correlations(const RunConfig& cfg) {
  ShiftParams sh = cfg.shifts();
  TruncationConfig tc = cfg.truncation();
  PrimeTable table = build_table(
      std::max<long long>(cfg.x + cfg.h_max, tc.prime_cutoff));
  auto scan = correlation_scan(cfg.x, cfg.h_max, sh, tc, table);

  std::vector<double> rels;
  double mean = 0.0;
  for (const auto& r : scan)
    if (r.rel_defined) {
      rels.push_back(r.rel_error);
      mean += r.rel_error;
    }
  double median = 0.0;
  if (!rels.empty()) {
    mean /= static_cast<double>(rels.size());
    std::nth_element(rels.begin(), rels.begin() + rels.size() / 2, rels.end());
    median = rels[rels.size() / 2];
  }

  ReportTable t;
  t.add_meta("subcommand", std::string("correlations"));
  cfg.echo(t, sh);
  t.add_meta("x", static_cast<long long>(cfg.x));
  t.add_meta("h_max", static_cast<long long>(cfg.h_max));
  t.add_meta("median_rel_error", median);
  t.add_meta("mean_rel_error", rels.empty() ? 0.0 : mean);
  t.columns = {"x",         "h",         "empirical", "predicted",
               "abs_error", "rel_error", "rel_defined"};
  for (const auto& r : scan)
    t.rows.push_back({static_cast<long long>(r.x), static_cast<long long>(r.h),
                      r.empirical, r.predicted, r.abs_error, r.rel_error,
                      r.rel_defined});
  write_report(cfg.out, cfg.format, t);
  return 0;
}

int cmd_meanvalue(const RunConfig& cfg) {
  ShiftParams sh = cfg.shifts();
  TruncationConfig tc = cfg.truncation();
  TestFunction f(cfg.center, cfg.sigma);
  std::vector<double> Ts = cfg.T_list;
  if (Ts.empty()) Ts = {500.0};
  long long need = tc.prime_cutoff;
  for (double T : Ts)
    need = std::max<long long>(need, meanvalue_X(T, cfg.lambda) + 1);
  PrimeTable table = build_table(need);

  ReportTable t;
  t.add_meta("subcommand", std::string("meanvalue"));
  cfg.echo(t, sh);
  t.add_meta("lambda", cfg.lambda);
  t.add_meta("sigma", cfg.sigma);
  t.add_meta("center", cfg.center);
  t.columns = {"T",        "X",           "lambda",
               "direct",   "conjectured", "diagonal",
               "rel_error", "conjectured_gated", "diagonal_dominated",
               "gate_reason"};
  for (double T : Ts) {
    auto rep = compare_meanvalue(T, cfg.lambda, sh, f, tc, table);
    t.rows.push_back({rep.T, static_cast<long long>(rep.X), rep.lambda,
                      rep.direct, rep.conjectured, rep.diagonal, rep.rel_error,
                      rep.conjectured_gated, rep.diagonal_dominated,
                      rep.gate_reason});
  }
  write_report(cfg.out, cfg.format, t);
  return 0;
}

int cmd_singular_series(const RunConfig& cfg) {
  ShiftParams sh = cfg.shifts();
  TruncationConfig tc = cfg.truncation();
  PrimeTable table = build_table(
      std::max<long long>(tc.prime_cutoff, cfg.h_max + 1));

  ReportTable t;
  t.add_meta("subcommand", std::string("singular-series"));
  cfg.echo(t, sh);
  t.add_meta("h_max", static_cast<long long>(cfg.h_max));
  t.columns = {"h", "S", "tail_bound"};
  for (std::int64_t h = 1; h <= cfg.h_max; ++h) {
    auto v = singular_series(h, sh, tc, table);
    t.rows.push_back({static_cast<long long>(h), v.value, v.tail_bound});
  }
  write_report(cfg.out, cfg.format, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ratios: coefficient-correlation and mean-value numerics"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* selftest = app.add_subcommand("selftest", "run property suites");
  CLI::App* identities =
      app.add_subcommand("identities", "q-sum identity scan over s and shifts");
  CLI::App* correlations =
      app.add_subcommand("correlations", "shifted coefficient correlations");
  CLI::App* meanvalue =
      app.add_subcommand("meanvalue", "truncated mean value, three evaluations");
  CLI::App* singular =
      app.add_subcommand("singular-series", "singular series table over h");

  for (CLI::App* c : {selftest, identities, correlations, meanvalue, singular})
    add_common_flags(c, cfg);
  correlations->add_option("--x", cfg.x, "correlation sum length");
  correlations->add_option("--h-max", cfg.h_max, "largest shift h");
  singular->add_option("--h-max", cfg.h_max, "largest shift h");
  meanvalue->add_option("--T", cfg.T_list, "height(s) T (repeatable)");
  meanvalue->add_option("--lambda", cfg.lambda, "X = round(T^lambda)");
  meanvalue->add_option("--sigma", cfg.sigma, "Gaussian weight width");
  meanvalue->add_option("--center", cfg.center, "Gaussian weight center");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string sub = app.get_subcommands().front()->get_name();
  try {
    validate(cfg, sub);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return 2;
  }

  try {
    if (sub == "selftest") return cmd_selftest(cfg);
    if (sub == "identities") return cmd_identities(cfg);
    if (sub == "correlations") return cmd_correlations(cfg);
    if (sub == "meanvalue") return cmd_meanvalue(cfg);
    return cmd_singular_series(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "computation failed: %s\n", e.what());
    return 3;
  }
}
