#include "dml_cli/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dml/bounds.hpp"
#include "dml/characters.hpp"
#include "dml/error.hpp"
#include "dml/export.hpp"
#include "dml/lfunc.hpp"
#include "dml/moments.hpp"
#include "dml/sieve.hpp"
#include "dml/sums.hpp"
#include "dml/theta.hpp"
#include "dml_cli/verify.hpp"

namespace dml::cli {

namespace {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QRange {
  u64 lo = 0;
  u64 hi = 0;
};

/// Everything a subcommand may read, filled by the parser and validated
/// before dispatch.
struct RunConfig {
  unsigned threads = 1;
  std::string format = "csv";
  std::string output;

  u64 q = 0;
  std::string q_range;
  std::string step = "prime";
  bool primitive_only = false;
  std::string parity;
  u64 chi = 1;
  double sigma = 0.5;
  double t = 0.0;
  double k = 3.0;
  double eps = 1e-12;
  std::string y_mode = "sqrt";
  bool duality = false;
  std::vector<double> a{1.0, 1.0};
  std::vector<double> shifts{0.0, 0.0};
  double A = 1.0;
  double offset = 0.0;
  std::string mode = "demo";
  double threshold = kDemoThreshold;
  std::string pred = "eq5";
  double l0_exponent = 4.0;
  double prop31_t = 0.0;
  std::string module = "all";
  double x = 1e5;

  Exec exec() const { return Exec{threads}; }
};

std::string fmt15(double v) { return format_cell(Cell{v}); }

QRange parse_q_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("--q-range must look like a:b");
  QRange range;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    range.lo = std::stoull(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    range.hi = std::stoull(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw ValidationError("--q-range must look like a:b with integers a <= b");
  }
  if (range.lo < 1 || range.lo > range.hi) throw ValidationError("--q-range must satisfy 1 <= a <= b");
  return range;
}

std::optional<Parity> parse_parity_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_parity(text);
  } catch (const DomainError&) {
    throw ValidationError("--parity must be even or odd");
  }
}

Format parse_format_flag(const std::string& text) {
  try {
    return parse_format(text);
  } catch (const DomainError&) {
    throw ValidationError("--out must be csv or json");
  }
}

struct YChoice {
  YMode mode;
  double fixed;
};

YChoice parse_y_mode(const std::string& text) {
  if (text == "sqrt") return {YMode::sqrt_q, 0.0};
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string value = text.substr(prefix.size());
      const double y = std::stod(value, &used);
      if (used == value.size() && y >= 1) return {YMode::fixed, y};
    } catch (const std::logic_error&) {
    }
  }
  throw ValidationError("--y-mode must be sqrt or fixed:<y> with y >= 1");
}

ShiftConfig shift_config(const RunConfig& cfg) {
  ShiftConfig shift{cfg.a, cfg.shifts, cfg.A};
  if (shift.a.empty()) throw ValidationError("--a must list at least one exponent");
  if (shift.a.size() != shift.t.size()) throw ValidationError("--a and --t must have the same length");
  for (double v : shift.a)
    if (!(v > 0)) throw ValidationError("--a entries must be positive");
  if (!(shift.A > 0)) throw ValidationError("--A must be positive");
  return shift;
}

std::vector<u64> q_list(const RunConfig& cfg) {
  const QRange range = parse_q_range(cfg.q_range);
  if (cfg.step == "prime") return primes_in_range(range.lo, range.hi);
  u64 step = 0;
  try {
    std::size_t used = 0;
    step = std::stoull(cfg.step, &used);
    if (used != cfg.step.size()) step = 0;
  } catch (const std::logic_error&) {
  }
  if (step == 0) throw ValidationError("--step must be prime or a positive integer");
  std::vector<u64> qs;
  for (u64 q = range.lo; q <= range.hi; q += step) qs.push_back(q);
  return qs;
}

void require_q(const RunConfig& cfg) {
  if (cfg.q < 1) throw ValidationError("--q must be at least 1");
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  const Format format = parse_format_flag(cfg.format);
  if (table.rows.empty()) throw ValidationError("no rows to write for the given flags");
  if (cfg.output.empty()) {
    out << render(table, format);
  } else {
    export_table(table, cfg.output, format);
  }
}

std::string join_exponents(std::span<const u64> exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) s += (i ? ";" : "") + std::to_string(exps[i]);
  return s;
}

std::string join_values(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ";" : "") + fmt15(values[i]);
  return s;
}

int cmd_characters(const RunConfig& cfg, std::ostream& out) {
  require_q(cfg);
  const auto parity = parse_parity_flag(cfg.parity);
  Table table{{"index", "exponents", "kappa", "conductor", "primitive", "gauss_sum_re", "gauss_sum_im"}, {}};
  for (const auto& chi : enumerate_characters(cfg.q)) {
    if (cfg.primitive_only && !chi.is_primitive()) continue;
    if (parity && chi.parity() != *parity) continue;
    const cplx tau = gauss_sum(chi);
    table.add_row({static_cast<std::int64_t>(chi.index()), join_exponents(chi.exponents()),
                   static_cast<std::int64_t>(chi.kappa()), static_cast<std::int64_t>(chi.conductor()),
                   chi.is_primitive(), tau.real(), tau.imag()});
  }
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_lvalue(const RunConfig& cfg, std::ostream& out) {
  require_q(cfg);
  if (!(cfg.sigma > -1)) throw ValidationError("--sigma must exceed -1");
  const auto chars = enumerate_characters(cfg.q);
  if (cfg.chi >= chars.size())
    throw ValidationError("--chi must be below phi(q) = " + std::to_string(chars.size()));
  const auto& chi = chars[cfg.chi];
  const EvalPoint s{cfg.sigma, cfg.t};
  if (s.is_one() && chi.is_principal()) throw ValidationError("--chi 0 has a pole at --sigma 1 --t 0");
  const cplx value = L_value(s, chi);
  const LogAbsL log_abs = log_abs_from_value(value);
  Table table{{"q", "chi", "sigma", "t", "re", "im", "abs", "log_abs", "near_zero"}, {}};
  table.add_row({static_cast<std::int64_t>(cfg.q), static_cast<std::int64_t>(cfg.chi), cfg.sigma, cfg.t,
                 value.real(), value.imag(), log_abs.abs_value,
                 log_abs.value ? Cell{*log_abs.value} : Cell{std::string{}}, log_abs.near_zero});
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_theta_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const QRange range = parse_q_range(cfg.q_range);
  const auto parity = parse_parity_flag(cfg.parity.empty() ? "even" : cfg.parity);
  if (!(cfg.k >= 0)) throw ValidationError("--k must be nonnegative");
  if (!(cfg.eps > 0)) throw ValidationError("--eps must be positive");
  Table table{{"q", "phi_q", "count_primitive", "moment", "predicted_bound", "ratio"}, {}};
  for (u64 q = std::max<u64>(range.lo, 3); q <= range.hi; ++q) {
    const auto m = theta_moment(q, cfg.k, *parity, cfg.eps, cfg.exec());
    if (m.empty_class) continue;
    if (m.near_zero > 0) err << "warning: q=" << q << " has " << m.near_zero << " near-zero theta values\n";
    const double bound = theta_moment_bound(q, cfg.k, *parity);
    table.add_row({static_cast<std::int64_t>(q), static_cast<std::int64_t>(euler_phi(q)),
                   static_cast<std::int64_t>(m.count), m.moment, bound, m.moment / bound});
  }
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_char_sum_moments(const RunConfig& cfg, std::ostream& out) {
  const QRange range = parse_q_range(cfg.q_range);
  const YChoice y_choice = parse_y_mode(cfg.y_mode);
  if (!(cfg.k > 0)) throw ValidationError("--k must be positive");
  auto y_for = [&](u64 q) { return y_choice.mode == YMode::sqrt_q ? std::sqrt(static_cast<double>(q)) : y_choice.fixed; };

  if (cfg.duality) {
    Table table{{"q", "chi", "y", "duality_ratio"}, {}};
    for (u64 q = std::max<u64>(range.lo, 3); q <= range.hi; ++q)
      for (const auto& chi : primitive_characters(q))
        table.add_row({static_cast<std::int64_t>(q), static_cast<std::int64_t>(chi.index()), y_for(q),
                       duality_ratio(chi, y_for(q))});
    emit(table, cfg, out);
    return kSuccess;
  }

  Table table{{"q", "y", "moment", "predicted", "dual_predicted", "ratio", "dual_ratio"}, {}};
  for (u64 q = std::max<u64>(range.lo, 3); q <= range.hi; ++q) {
    const double y = y_for(q);
    const double moment = char_sum_moment(q, cfg.k, y, cfg.exec());
    const double bound = char_sum_bound(q, cfg.k, y);
    const double dual = char_sum_dual_bound(q, cfg.k, y);
    table.add_row({static_cast<std::int64_t>(q), y, moment, bound, dual, moment / bound, moment / dual});
  }
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_shifted_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_q(cfg);
  if (cfg.q < 3) throw ValidationError("--q must be at least 3");
  if (!(cfg.offset >= 0)) throw ValidationError("--offset must be nonnegative");
  const ShiftConfig shift = shift_config(cfg);
  const double limit = std::pow(static_cast<double>(cfg.q), shift.A);
  for (double t : shift.t)
    if (std::abs(t) > limit) throw ValidationError("--t entries must satisfy |t| <= q^A");
  const auto m = shifted_moment(cfg.q, shift, cfg.offset, cfg.exec());
  for (u64 index : m.near_zero_indices) err << "warning: character " << index << " has a near-zero L value\n";
  const double bound = predicted_bound_B(cfg.q, shift);
  Table table{{"q", "a", "t", "offset", "moment", "predicted_B", "ratio", "count", "near_zero"}, {}};
  table.add_row({static_cast<std::int64_t>(cfg.q), join_values(shift.a), join_values(shift.t), cfg.offset, m.value,
                 bound, m.value / bound, static_cast<std::int64_t>(m.count),
                 static_cast<std::int64_t>(m.near_zero_indices.size())});
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_q(cfg);
  const ShiftConfig shift = shift_config(cfg);
  LadderMode mode;
  try {
    mode = parse_ladder_mode(cfg.mode);
  } catch (const DomainError&) {
    throw ValidationError("--mode must be paper or demo");
  }
  if (!(cfg.threshold > 0)) throw ValidationError("--threshold must be positive");
  if (!(std::log(std::log(static_cast<double>(cfg.q))) > 1.0)) throw ValidationError("--q must satisfy log log q > 1");
  const DyadicLadder ladder = dyadic_ladder(cfg.q, shift, mode, cfg.threshold);
  const double top_prime = std::exp(ladder.betas.back() * std::log(static_cast<double>(cfg.q)));
  if (top_prime > static_cast<double>(kSieveCap))
    throw ValidationError("--threshold gives a ladder needing primes up to " + fmt15(top_prime) +
                          ", beyond the sieve cap");
  if (ladder.degenerate)
    err << "warning: degenerate ladder, no beta_i with i >= 1 lies below the cap " << fmt15(ladder.cap)
        << "; using I = 1\n";

  const auto chars = primitive_characters(cfg.q);
  const auto labels = parallel_map(chars.size(), cfg.exec(),
                                   [&](std::size_t i) { return classify_character(chars[i], ladder, shift); });
  Table table{{"index", "label", "j", "witness"}, {}};
  for (std::size_t i = 1; i <= ladder.cap_index; ++i)
    for (std::size_t l = i; l <= ladder.cap_index; ++l) {
      table.headers.push_back("G_" + std::to_string(i) + "_" + std::to_string(l) + "_re");
      table.headers.push_back("G_" + std::to_string(i) + "_" + std::to_string(l) + "_im");
    }
  std::size_t t_count = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& label = labels[i];
    if (label.kind == ClassLabel::Kind::T) ++t_count;
    std::vector<Cell> row{static_cast<std::int64_t>(chars[i].index()), label.name(),
                          static_cast<std::int64_t>(label.j), static_cast<std::int64_t>(label.witness)};
    for (const cplx g : label.segments) {
      row.emplace_back(g.real());
      row.emplace_back(g.imag());
    }
    table.add_row(std::move(row));
  }
  err << "ladder I=" << ladder.cap_index << " cap=" << fmt15(ladder.cap) << " T=" << t_count
      << " S=" << chars.size() - t_count << "\n";
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  ScanOptions opt;
  try {
    opt.selector = parse_bound_selector(cfg.pred);
  } catch (const DomainError&) {
    throw ValidationError("--pred must be one of eq5, gstar, thm2, thm3, thm3-dual, prop31");
  }
  opt.cfg = shift_config(cfg);
  opt.k = cfg.k;
  if (!(cfg.k > 0)) throw ValidationError("--k must be positive");
  opt.parity = parse_parity_flag(cfg.parity.empty() ? "even" : cfg.parity).value();
  const YChoice y_choice = parse_y_mode(cfg.y_mode);
  opt.y_mode = y_choice.mode;
  opt.y_fixed = y_choice.fixed;
  opt.l0_exponent = cfg.l0_exponent;
  opt.prop31_t = cfg.prop31_t;
  opt.eps = cfg.eps;
  std::vector<u64> qs;
  for (u64 q : q_list(cfg))
    if (q >= 3) qs.push_back(q);
  if (qs.empty()) throw ValidationError("--q-range contains no admissible q >= 3");
  if (opt.selector == BoundSelector::g_star || opt.selector == BoundSelector::prop31) {
    if (opt.y_mode == YMode::fixed && opt.y_fixed < 2) throw ValidationError("--y-mode fixed value must be at least 2");
    if (opt.selector == BoundSelector::g_star)
      for (u64 q : qs)
        if (opt.y_mode == YMode::fixed && opt.y_fixed > static_cast<double>(q))
          throw ValidationError("--y-mode fixed value must not exceed q");
  }
  const auto reports = moment_ratio_scan(qs, opt, cfg.exec());
  Table table{{"q", "config", "sigma_offset", "y", "empirical", "predicted", "ratio", "near_zero"}, {}};
  for (const auto& r : reports)
    table.add_row({static_cast<std::int64_t>(r.q), r.config, r.sigma_offset, r.y, r.empirical, r.predicted, r.ratio,
                   static_cast<std::int64_t>(r.near_zero)});
  emit(table, cfg, out);
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.x >= 2 && cfg.x <= static_cast<double>(kSieveCap))) throw ValidationError("--x must lie in [2, 1e8]");
  std::vector<std::string> modules;
  if (cfg.module == "all") {
    modules = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.module) == names.end())
      throw ValidationError("verify: unknown module '" + cfg.module + "'");
    modules = {cfg.module};
  }
  VerifyOptions opt{cfg.x, cfg.exec()};
  std::size_t failed = 0;
  std::size_t total = 0;
  out << "suite       check                                                    measured              bound                 result\n";
  for (const auto& module : modules) {
    for (const auto& check : run_suite(module, opt)) {
      ++total;
      if (!check.passed) ++failed;
      char line[256];
      std::snprintf(line, sizeof line, "%-11s %-56s %-21s %-21s %s\n", check.suite.c_str(), check.name.c_str(),
                    fmt15(check.measured).c_str(), fmt15(check.bound).c_str(), check.passed ? "PASS" : "FAIL");
      out << line;
    }
  }
  out << "summary: " << total - failed << "/" << total << " checks passed\n";
  return failed == 0 ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dirichlet L-function moment laboratory", "dml"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out,--format", cfg.format, "csv or json")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  };
  auto add_shift = [&](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "exponents a_j")->delimiter(',')->capture_default_str();
    sub->add_option("--t", cfg.shifts, "shifts t_j")->delimiter(',')->capture_default_str();
    sub->add_option("--A", cfg.A, "growth parameter A")->capture_default_str();
  };

  auto* characters = app.add_subcommand("characters", "list the characters modulo q");
  characters->add_option("--q", cfg.q, "modulus")->required();
  characters->add_flag("--primitive", cfg.primitive_only, "primitive characters only");
  characters->add_option("--parity", cfg.parity, "even or odd");
  add_output(characters);

  auto* lvalue = app.add_subcommand("lvalue", "evaluate L(s, chi)");
  lvalue->add_option("--q", cfg.q, "modulus")->required();
  lvalue->add_option("--chi", cfg.chi, "character index")->capture_default_str();
  lvalue->add_option("--sigma", cfg.sigma, "real part of s")->capture_default_str();
  lvalue->add_option("--t", cfg.t, "imaginary part of s")->capture_default_str();
  add_output(lvalue);

  auto* theta = app.add_subcommand("theta-moments", "theta moments over a range of q");
  theta->add_option("--q-range", cfg.q_range, "a:b")->required();
  theta->add_option("--k", cfg.k, "moment exponent 2k")->capture_default_str();
  theta->add_option("--parity", cfg.parity, "even or odd (default even)");
  theta->add_option("--eps", cfg.eps, "theta truncation tolerance")->capture_default_str();
  add_output(theta);

  auto* char_sums = app.add_subcommand("char-sum-moments", "character sum moments over a range of q");
  char_sums->add_option("--q-range", cfg.q_range, "a:b")->required();
  char_sums->add_option("--k", cfg.k, "moment exponent 2k")->capture_default_str();
  char_sums->add_option("--y-mode", cfg.y_mode, "sqrt or fixed:<y>")->capture_default_str();
  char_sums->add_flag("--duality", cfg.duality, "per-character duality ratios instead of moments");
  add_output(char_sums);

  auto* shifted = app.add_subcommand("shifted-moments", "shifted L-moment at one modulus");
  shifted->add_option("--q", cfg.q, "modulus")->required();
  shifted->add_option("--offset", cfg.offset, "sigma offset from 1/2")->capture_default_str();
  add_shift(shifted);
  add_output(shifted);

  auto* classify = app.add_subcommand("classify", "label primitive characters by the dyadic ladder");
  classify->add_option("--q", cfg.q, "modulus")->required();
  classify->add_option("--mode", cfg.mode, "paper or demo")->capture_default_str();
  classify->add_option("--threshold", cfg.threshold, "demo cap on beta")->capture_default_str();
  add_shift(classify);
  add_output(classify);

  auto* scan = app.add_subcommand("scan", "moment / predicted-bound ratios over a range of q");
  scan->add_option("--pred", cfg.pred, "eq5, gstar, thm2, thm3, thm3-dual or prop31")->capture_default_str();
  scan->add_option("--q-range", cfg.q_range, "a:b")->required();
  scan->add_option("--step", cfg.step, "prime or an integer stride")->capture_default_str();
  scan->add_option("--k", cfg.k, "moment exponent")->capture_default_str();
  scan->add_option("--parity", cfg.parity, "even or odd (thm2)");
  scan->add_option("--y-mode", cfg.y_mode, "sqrt or fixed:<y>")->capture_default_str();
  scan->add_option("--eps", cfg.eps, "theta truncation tolerance")->capture_default_str();
  scan->add_option("--l0-exponent", cfg.l0_exponent, "prop31 exponent of L0")->capture_default_str();
  scan->add_option("--shift", cfg.prop31_t, "prop31 shift t")->capture_default_str();
  add_shift(scan);
  add_output(scan);

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("module", cfg.module, "module name or all")->capture_default_str();
  verify->add_option("--x", cfg.x, "Mertens range")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationError;
  }

  try {
    if (cfg.threads < 1) throw ValidationError("--threads must be at least 1");
    if (*characters) return cmd_characters(cfg, out);
    if (*lvalue) return cmd_lvalue(cfg, out);
    if (*theta) return cmd_theta_moments(cfg, out, err);
    if (*char_sums) return cmd_char_sum_moments(cfg, out);
    if (*shifted) return cmd_shifted_moments(cfg, out, err);
    if (*classify) return cmd_classify(cfg, out, err);
    if (*scan) return cmd_scan(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace dml::cli
