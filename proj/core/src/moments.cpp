#include "dml/moments.hpp"

#include <chrono>
#include <memory>
#include <cmath>
#include <map>
#include <sstream>

#include "dml/constants.hpp"
#include "dml/error.hpp"
#include "dml/lfunc.hpp"
#include "dml/sieve.hpp"
#include "dml/sums.hpp"
#include "dml/theta.hpp"

namespace dml {

ShiftedMoment shifted_moment(u64 q, const ShiftConfig& cfg, double sigma_offset, const Exec& exec) {
  cfg.validate();
  if (q < 3) throw DomainError("shifted_moment: q must be at least 3");
  if (!(sigma_offset >= 0)) throw DomainError("shifted_moment: offset must be nonnegative");
  const double t_limit = std::pow(static_cast<double>(q), cfg.A);
  for (double t : cfg.t)
    if (std::abs(t) > t_limit) throw DomainError("shifted_moment: |t_j| exceeds q^A");

  std::map<double, std::size_t> slot;
  for (double t : cfg.t) slot.emplace(t, 0);
  std::vector<double> distinct;
  for (auto& [t, index] : slot) {
    index = distinct.size();
    distinct.push_back(t);
  }
  const auto evaluators = parallel_map(distinct.size(), exec, [&](std::size_t i) {
    return std::make_shared<const LEvaluator>(q, EvalPoint{0.5 + sigma_offset, distinct[i]});
  });

  const auto chars = primitive_characters(q);
  struct Term {
    double value = 0;
    bool near_zero = false;
  };
  const auto terms = parallel_map(chars.size(), exec, [&](std::size_t i) {
    std::vector<double> magnitude(distinct.size());
    for (std::size_t d = 0; d < distinct.size(); ++d) magnitude[d] = std::abs((*evaluators[d])(chars[i]));
    Term term{1.0, false};
    for (std::size_t j = 0; j < cfg.a.size(); ++j) {
      const double m = magnitude[slot.at(cfg.t[j])];
      if (m < constants::kZeroThreshold) {
        term = {0.0, true};
        break;
      }
      term.value *= std::pow(m, cfg.a[j]);
    }
    return term;
  });

  ShiftedMoment result{0.0, chars.size(), {}};
  std::vector<double> values(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    values[i] = terms[i].value;
    if (terms[i].near_zero) result.near_zero_indices.push_back(chars[i].index());
  }
  result.value = pairwise_sum(values);
  return result;
}

std::string to_string(BoundSelector selector) {
  switch (selector) {
    case BoundSelector::eq5: return "eq5";
    case BoundSelector::g_star: return "gstar";
    case BoundSelector::thm2: return "thm2";
    case BoundSelector::thm3: return "thm3";
    case BoundSelector::thm3_dual: return "thm3-dual";
    case BoundSelector::prop31: return "prop31";
  }
  return "?";
}

BoundSelector parse_bound_selector(const std::string& text) {
  for (auto s : {BoundSelector::eq5, BoundSelector::g_star, BoundSelector::thm2, BoundSelector::thm3,
                 BoundSelector::thm3_dual, BoundSelector::prop31})
    if (to_string(s) == text) return s;
  throw DomainError("unknown bound selector '" + text + "'");
}

namespace {

std::string join(const std::vector<double>& values) {
  std::ostringstream out;
  out.precision(15);
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ";" : "") << values[i];
  return out.str();
}

std::string describe(const ScanOptions& opt) {
  std::ostringstream out;
  out.precision(15);
  out << to_string(opt.selector);
  switch (opt.selector) {
    case BoundSelector::eq5:
    case BoundSelector::g_star:
      out << " a=" << join(opt.cfg.a) << " t=" << join(opt.cfg.t);
      break;
    case BoundSelector::thm2:
      out << " k=" << opt.k << " parity=" << to_string(opt.parity);
      break;
    case BoundSelector::thm3:
    case BoundSelector::thm3_dual:
      out << " k=" << opt.k;
      break;
    case BoundSelector::prop31:
      out << " k=" << opt.k << " t=" << opt.prop31_t << " L0^" << opt.l0_exponent;
      break;
  }
  return out.str();
}

double scan_y(u64 q, const ScanOptions& opt) {
  return opt.y_mode == YMode::sqrt_q ? std::sqrt(static_cast<double>(q)) : opt.y_fixed;
}

MomentReport scan_one(u64 q, const ScanOptions& opt, const Exec& exec) {
  const auto start = std::chrono::steady_clock::now();
  MomentReport r{q, describe(opt), 0.0, 0.0, 0.0, 0.0, 0.0, 0, 0.0};
  switch (opt.selector) {
    case BoundSelector::eq5: {
      const auto m = shifted_moment(q, opt.cfg, 0.0, exec);
      r.empirical = m.value;
      r.near_zero = m.near_zero_indices.size();
      r.predicted = predicted_bound_B(q, opt.cfg);
      break;
    }
    case BoundSelector::g_star: {
      r.y = scan_y(q, opt);
      if (!(r.y >= 2 && r.y <= static_cast<double>(q))) throw DomainError("scan: y must lie in [2, q]");
      r.sigma_offset = 1.0 / std::log(r.y);
      const auto m = shifted_moment(q, opt.cfg, r.sigma_offset, exec);
      r.empirical = m.value;
      r.near_zero = m.near_zero_indices.size();
      r.predicted = std::exp(log_predicted_bound_g_star(q, r.y, opt.cfg));
      break;
    }
    case BoundSelector::thm2: {
      const auto m = theta_moment(q, opt.k, opt.parity, opt.eps, exec);
      r.empirical = m.moment;
      r.near_zero = m.near_zero;
      r.predicted = theta_moment_bound(q, opt.k, opt.parity);
      break;
    }
    case BoundSelector::thm3:
    case BoundSelector::thm3_dual: {
      r.y = scan_y(q, opt);
      r.empirical = char_sum_moment(q, opt.k, r.y, exec);
      r.predicted = opt.selector == BoundSelector::thm3 ? char_sum_bound(q, opt.k, r.y)
                                                        : char_sum_dual_bound(q, opt.k, r.y);
      break;
    }
    case BoundSelector::prop31: {
      r.y = scan_y(q, opt);
      if (!(r.y >= 2)) throw DomainError("scan: y must be at least 2");
      r.sigma_offset = 1.0 / std::log(r.y);
      const ShiftConfig single{{2.0 * opt.k}, {opt.prop31_t}, opt.cfg.A};
      const auto m = shifted_moment(q, single, r.sigma_offset, exec);
      r.empirical = m.value;
      r.near_zero = m.near_zero_indices.size();
      const double l0 = std::min(std::log(r.y) + 1.0, std::log(static_cast<double>(q)));
      r.predicted = static_cast<double>(euler_phi(q)) * std::pow(l0, opt.l0_exponent);
      break;
    }
  }
  r.ratio = r.empirical / r.predicted;
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<MomentReport> moment_ratio_scan(const std::vector<u64>& qs, const ScanOptions& opt, const Exec& exec) {
  if (qs.empty()) throw DomainError("moment_ratio_scan: q list is empty");
  std::vector<MomentReport> reports;
  reports.reserve(qs.size());
  for (u64 q : qs) reports.push_back(scan_one(q, opt, exec));
  return reports;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  const auto table = shared_primes(hi);
  for (const std::uint32_t p : table->primes_between(static_cast<double>(lo) - 1.0, static_cast<double>(hi)))
    out.push_back(p);
  return out;
}

}  // namespace dml
