#include "dml_cli/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dml/bounds.hpp"
#include "dml/characters.hpp"
#include "dml/constants.hpp"
#include "dml/export.hpp"
#include "dml/lfunc.hpp"
#include "dml/moments.hpp"
#include "dml/sums.hpp"
#include "dml/theta.hpp"

namespace dml::cli {

namespace {

using Suite = std::vector<Check>;

Suite characters_suite(const VerifyOptions&) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"characters", name, measured, bound, measured <= bound});
  };

  double orthogonality = 0;
  for (u64 q = 1; q <= 60; ++q) {
    const auto chars = enumerate_characters(q);
    for (u64 a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      cplx sum = 0;
      for (const auto& chi : chars) sum += chi(static_cast<i64>(a));
      const double expected = a % q == 1 % q ? static_cast<double>(euler_phi(q)) : 0.0;
      orthogonality = std::max(orthogonality, std::abs(sum - expected));
    }
  }
  add("orthogonality, q <= 60", orthogonality, 1e-10);

  double count_mismatch = 0;
  double gauss = 0;
  double conductor_mismatch = 0;
  for (u64 q = 1; q <= 200; ++q) {
    i64 primitive = 0;
    for (const auto& chi : enumerate_characters(q)) {
      if (chi.is_primitive()) {
        ++primitive;
        gauss = std::max(gauss, std::abs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<double>(q))));
      }
      if (chi.conductor() != conductor_by_induction(chi)) ++conductor_mismatch;
    }
    if (primitive != primitive_count_formula(q)) ++count_mismatch;
  }
  add("primitive count formula mismatches, q <= 200", count_mismatch, 0);
  add("| |tau| - sqrt q |, primitive, q <= 200", gauss, 1e-9);
  add("conductor local vs induction mismatches, q <= 200", conductor_mismatch, 0);

  std::mt19937_64 rng(20240611);
  double multiplicativity = 0;
  for (u64 q : {7, 12, 15, 16, 24, 60}) {
    const auto chars = enumerate_characters(q);
    std::uniform_int_distribution<i64> pick(1, 100000);
    for (int trial = 0; trial < 10000; ++trial) {
      const i64 m = pick(rng);
      const i64 n = pick(rng);
      const auto& chi = chars[static_cast<std::size_t>(trial) % chars.size()];
      multiplicativity = std::max(multiplicativity, std::abs(chi(m * n) - chi(m) * chi(n)));
    }
  }
  add("multiplicativity on random pairs", multiplicativity, 1e-12);
  return s;
}

Suite lfunc_suite(const VerifyOptions&) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"lfunc", name, measured, bound, measured <= bound});
  };
  double residual = 0;
  for (u64 q : {3, 4, 5, 7, 8, 11, 12, 13})
    for (const auto& chi : primitive_characters(q))
      for (double t : {0.0, 0.5, 1.0, 2.7}) residual = std::max(residual, functional_equation_residual({0.5, t}, chi));
  add("functional equation residual, q <= 13", residual, 1e-8);

  double conjugation = 0;
  for (u64 q : {5, 7, 9, 16})
    for (const auto& chi : enumerate_characters(q))
      for (const EvalPoint s0 : {EvalPoint{0.5, 3.2}, EvalPoint{1.3, -7.5}, EvalPoint{-0.4, 1.1}}) {
        if (chi.is_principal() && s0.is_one()) continue;
        const cplx lhs = L_value({s0.sigma, -s0.t}, chi.conjugate());
        conjugation = std::max(conjugation, std::abs(lhs - std::conj(L_value(s0, chi))));
      }
  add("L(conj s, conj chi) = conj L(s, chi)", conjugation, 1e-10);

  double recurrence = 0;
  for (double sigma : {-0.5, 0.5, 2.0})
    for (double t : {0.0, 5.0, 30.0})
      for (double a : {0.1, 0.5, 0.9, 1.0}) {
        const EvalPoint s0{sigma, t};
        const cplx lhs = hurwitz_zeta(s0, a) - hurwitz_zeta_detailed(s0, a + 1.0).value;
        recurrence = std::max(recurrence, std::abs(lhs - std::exp(-s0.s() * std::log(a))));
      }
  add("Hurwitz recurrence", recurrence, 1e-10);

  double dirichlet = 0;
  for (u64 q : {4, 5, 7})
    for (const auto& chi : enumerate_characters(q)) {
      const EvalPoint s0{2.5, 1.5};
      cplx partial = 0;
      const int terms = 200000;
      for (int n = 1; n <= terms; ++n) partial += chi(n) * std::exp(-s0.s() * std::log(static_cast<double>(n)));
      const double tail_bound = std::pow(static_cast<double>(terms), 1.0 - s0.sigma) / (s0.sigma - 1.0);
      dirichlet = std::max(dirichlet, std::abs(partial - L_value(s0, chi)) - tail_bound);
    }
  add("Dirichlet series beyond tail bound, sigma = 2.5", dirichlet, 1e-9);
  return s;
}

Suite theta_suite(const VerifyOptions& opt) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"theta", name, measured, bound, measured <= bound});
  };
  double certification = 0;
  for (u64 q : {3, 5, 8, 13, 40})
    for (const auto& chi : enumerate_characters(q)) {
      const double eps = 1e-8;
      const double diff = std::abs(theta_direct(chi, eps).value - theta_direct(chi, eps / 100).value);
      certification = std::max(certification, diff / eps);
    }
  add("theta tail certification, |diff| / eps", certification, 1.0);

  double mellin = 0;
  for (u64 q = 3; q <= 50; ++q) {
    const auto chars = primitive_characters(q, Parity::even);
    if (chars.empty()) continue;
    const auto values = theta_mellin_batch(chars, 1.0, 40.0);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const cplx direct = theta_direct(chars[i]).value;
      mellin = std::max(mellin, std::abs(values[i].value - direct) / std::abs(direct));
    }
  }
  add("Mellin vs direct relative difference, q <= 50", mellin, 1e-6);

  double pairing = 0;
  for (u64 q : {13, 40, 61}) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      const auto full = theta_moment(q, 3.0, parity, 1e-12, opt.exec);
      std::vector<double> half;
      for (const auto& chi : primitive_characters(q, parity)) {
        const u64 self = chi.index();
        const u64 partner = chi.conjugate().index();
        const double magnitude = std::pow(std::abs(theta_direct(chi).value), 6.0);
        if (self < partner) half.push_back(2.0 * magnitude);
        if (self == partner) half.push_back(magnitude);
      }
      pairing = std::max(pairing, std::abs(pairwise_sum(half) - full.moment) / std::max(1.0, full.moment));
    }
  }
  add("conjugate-pair half sum vs full moment (relative)", pairing, 1e-10);
  return s;
}

Suite bounds_suite(const VerifyOptions& opt) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"bounds", name, measured, bound, measured <= bound});
  };
  const double x = opt.mertens_x;
  const double base = mertens_cos_sum(x, 0.0);
  double mertens = 0;
  double cosine_excess = -1e300;
  for (double alpha : {0.01, 0.1, 1.0, 5.0, 20.0, 100.0}) {
    const double value = mertens_cos_sum(x, alpha);
    const double zeta_log = std::log(std::abs(zeta_value({1.0 + 1.0 / std::log(x), alpha})));
    mertens = std::max(mertens, std::abs(value - zeta_log));
    cosine_excess = std::max(cosine_excess, value - base);
  }
  add("Mertens cosine sum vs log|zeta| (C0)", mertens, constants::kMertensSlack);
  add("cosine sum minus alpha = 0 sum", cosine_excess, 0.0);

  double majorant = -1e300;
  for (u64 q = 3; q <= 101; ++q) {
    if (!is_prime(q)) continue;
    for (double t : {0.0, 1.0}) {
      const LEvaluator evaluator(q, {0.5, t});
      for (const auto& chi : primitive_characters(q)) {
        const auto log_abs = log_abs_from_value(evaluator(chi));
        if (!log_abs.value) continue;
        majorant = std::max(majorant, *log_abs.value - sound_majorant(chi, t, static_cast<double>(q)));
      }
    }
  }
  add("log|L| minus majorant, primes q <= 101 (C1)", majorant, constants::kMajorantSlack);

  double counting = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<std::size_t> pick(m, 0);
    // Nondecreasing index vectors over {2, 3, 5} enumerate the multisets.
    while (true) {
      std::vector<u64> primes;
      for (std::size_t i : pick) primes.push_back(std::array<u64, 3>{2, 3, 5}[i]);
      const auto c = count_signed_factorizations(primes);
      if (c.brute_pairs != c.formula_pairs || c.brute_signed != c.formula_signed) ++counting;
      std::size_t pos = m;
      while (pos > 0 && pick[pos - 1] == 2) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < m; ++i) pick[i] = pick[pos - 1];
    }
  }
  add("signed factorization count mismatches, m <= 4", counting, 0);
  return s;
}

Suite sums_suite(const VerifyOptions&) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"sums", name, measured, bound, measured <= bound});
  };
  const auto quadratic5 = enumerate_characters(5)[2];
  const auto weight = SmoothWeight::make(20.0, 2.0);
  const auto perron = perron_weighted(quadratic5, weight, 1.5, 500.0);
  add("Perron vs weighted sum, q = 5, y = 20, t_max = 500", std::abs(perron.value - weighted_char_sum(quadratic5, weight)),
      constants::kPerronTolerance);

  double polya = 0;
  for (u64 q = 3; q <= 500; ++q)
    for (const auto& chi : primitive_characters(q)) {
      const auto r = polya_expansion(chi, std::sqrt(static_cast<double>(q)));
      polya = std::max(polya, r.residual / std::log(static_cast<double>(q)));
    }
  add("Polya residual / log q, q <= 500 (C2)", polya, constants::kPolyaSlack);

  double counting = -1e300;
  for (u64 q : {7, 11, 24})
    for (const auto& chi : enumerate_characters(q))
      for (double y : {10.0, 17.5, 30.0}) {
        const auto w = SmoothWeight::make(y, 1.5);
        const double diff = std::abs(char_sum(chi, y) - weighted_char_sum(chi, w));
        const double ramp = std::floor(y) - std::floor(w.y0());
        counting = std::max(counting, diff - ramp);
      }
  add("|sum (1 - f(n)) chi(n)| minus ramp integer count", counting, 0.0);

  double symmetry = 0;
  for (u64 q : {13, 37}) {
    for (const auto& chi : primitive_characters(q)) {
      const double a = std::abs(char_sum(chi, 6.0));
      const double b = std::abs(char_sum(chi.conjugate(), 6.0));
      symmetry = std::max(symmetry, std::abs(a - b));
    }
  }
  add("conjugate-pair character sum magnitudes", symmetry, 1e-12);
  return s;
}

Suite moments_suite(const VerifyOptions& opt) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"moments", name, measured, bound, measured <= bound});
  };
  const ShiftConfig cfg{{1.0, 2.0, 0.5}, {0.0, 0.7, -1.3}, 1.0};
  const ShiftConfig permuted{{0.5, 1.0, 2.0}, {-1.3, 0.0, 0.7}, 1.0};
  const ShiftConfig negated{{1.0, 2.0, 0.5}, {0.0, -0.7, 1.3}, 1.0};
  double permutation = 0;
  double negation = 0;
  for (u64 q : {11, 23, 40}) {
    const double base = shifted_moment(q, cfg, 0.0, opt.exec).value;
    permutation = std::max(permutation, std::abs(shifted_moment(q, permuted, 0.0, opt.exec).value - base) / base);
    negation = std::max(negation, std::abs(shifted_moment(q, negated, 0.0, opt.exec).value - base) / base);
  }
  add("permutation invariance (relative)", permutation, 1e-10);
  add("t -> -t invariance (relative)", negation, 1e-10);

  double offset = -1e300;
  const double zeta32 = zeta_value({1.5, 0.0}).real();
  for (u64 q : {7, 31, 101}) {
    const double moment = shifted_moment(q, {{2.0}, {0.0}, 1.0}, 1.5, opt.exec).value;
    offset = std::max(offset, moment / (static_cast<double>(euler_phi(q)) * zeta32 * zeta32));
  }
  add("offset 1.5 moment / (phi(q) zeta(3/2)^2)", offset, 1.0);

  ScanOptions theta_scan;
  theta_scan.selector = BoundSelector::thm2;
  theta_scan.k = 3.0;
  ScanOptions sum_scan;
  sum_scan.selector = BoundSelector::thm3;
  sum_scan.k = 3.0;
  const auto primes = primes_in_range(100, 3000);
  double theta_out = 0;
  double sum_out = 0;
  for (const auto& r : moment_ratio_scan(primes, theta_scan, opt.exec))
    if (r.ratio < constants::kThetaRatioLow || r.ratio > constants::kThetaRatioHigh) ++theta_out;
  for (const auto& r : moment_ratio_scan(primes, sum_scan, opt.exec))
    if (r.ratio < constants::kCharSumRatioLow || r.ratio > constants::kCharSumRatioHigh) ++sum_out;
  add("theta k=3 ratios outside frozen band, primes 100..3000", theta_out, 0);
  add("character sum k=3 ratios outside frozen band", sum_out, 0);
  return s;
}

Suite cli_suite(const VerifyOptions&) {
  Suite s;
  auto add = [&](const std::string& name, double measured, double bound) {
    s.push_back({"cli", name, measured, bound, measured <= bound});
  };
  Table table{{"q", "label", "value", "flag"}, {}};
  table.add_row({std::int64_t{5}, std::string{"a,\"b\""}, 0.1234567890123456789, true});
  table.add_row({std::int64_t{7}, std::string{"plain"}, -3.5e-17, false});
  const Table parsed = parse_csv(to_csv(table));
  double mismatch = parsed.headers == table.headers ? 0 : 1;
  for (std::size_t r = 0; r < table.rows.size(); ++r)
    for (std::size_t c = 0; c < table.headers.size(); ++c)
      if (std::get<std::string>(parsed.rows[r][c]) != format_cell(table.rows[r][c])) ++mismatch;
  add("CSV round-trip mismatches", mismatch, 0);
  return s;
}

const std::map<std::string, std::function<Suite(const VerifyOptions&)>>& registry() {
  static const std::map<std::string, std::function<Suite(const VerifyOptions&)>> suites{
      {"characters", characters_suite}, {"lfunc", lfunc_suite},     {"theta", theta_suite}, {"bounds", bounds_suite},
      {"sums", sums_suite},             {"moments", moments_suite}, {"cli", cli_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"characters", "lfunc", "theta", "bounds", "sums", "moments", "cli"};
  return names;
}

std::vector<Check> run_suite(const std::string& module, const VerifyOptions& opt) {
  const auto it = registry().find(module);
  if (it == registry().end()) throw std::invalid_argument("unknown verify module '" + module + "'");
  return it->second(opt);
}

}  // namespace dml::cli
