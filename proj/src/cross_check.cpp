#include "sb3/cross_check.hpp"

#include <exception>

#include "sb3/birman.hpp"
#include "sb3/errors.hpp"

namespace sb3 {

bool SampleOutcome::agree() const {
  return error.empty() && burau == recursion && recursion == pinch;
}

bool SampleOutcome::ok() const {
  if (!agree()) return false;
  if (pair.kind == PairKind::Equal && !burau) return false;
  if (pair.kind == PairKind::NearMiss && burau) return false;
  if (eta_equal && *eta_equal != burau) return false;
  return true;
}

namespace {

void check_config(const CrossCheckConfig& cfg) {
  if (cfg.max_len > kMaxSampleLength)
    throw UsageError("max_len " + std::to_string(cfg.max_len) + " exceeds " +
                     std::to_string(kMaxSampleLength));
}

std::vector<std::string> traces_of(const SamplePair& p) {
  std::vector<std::string> out;
  out.push_back("w1 = " + render(p.w1));
  out.push_back("w2 = " + render(p.w2));
  for (Method m : {Method::Burau, Method::Recursion, Method::Pinch}) {
    try {
      for (auto& line : decide(m, p.w1, p.w2).trace)
        out.push_back(std::string(method_name(m)) + ": " + line);
    } catch (const std::exception& e) {
      out.push_back(std::string(method_name(m)) + ": error: " + e.what());
    }
  }
  return out;
}

CrossCheckReport aggregate(const CrossCheckConfig& cfg, std::vector<SampleOutcome>& outcomes) {
  CrossCheckReport report;
  report.config = cfg;
  for (auto& o : outcomes) {
    if (o.error.empty()) {
      (o.burau ? report.equal_verdicts : report.unequal_verdicts) += 1;
      if (o.eta_equal) ++report.birman_checked;
    }
    if (!o.ok()) {
      report.failure_traces.push_back(traces_of(o.pair));
      report.failures.push_back(std::move(o));
    }
  }
  return report;
}

}  // namespace

SampleOutcome run_sample(const CrossCheckConfig& cfg, std::uint64_t index) {
  SampleOutcome o;
  o.index = index;
  try {
    o.pair = sample_pair(cfg.seed, index, cfg.max_len);
    o.burau = equal_burau(o.pair.w1, o.pair.w2).equal;
    o.recursion = equal_sb3(o.pair.w1, o.pair.w2).equal;
    o.pinch = equal_sg3(o.pair.w1, o.pair.w2).equal;
    if (cfg.with_birman) o.eta_equal = eta(o.pair.w1) == eta(o.pair.w2);
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

CrossCheckReport cross_check_serial(const CrossCheckConfig& cfg) {
  check_config(cfg);
  std::vector<SampleOutcome> outcomes;
  outcomes.reserve(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i) outcomes.push_back(run_sample(cfg, i));
  return aggregate(cfg, outcomes);
}

CrossCheckReport cross_check(const CrossCheckConfig& cfg) {
  check_config(cfg);
  std::vector<SampleOutcome> outcomes(cfg.samples);
  const auto n = static_cast<std::int64_t>(cfg.samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i)
    outcomes[static_cast<std::size_t>(i)] = run_sample(cfg, static_cast<std::uint64_t>(i));
  return aggregate(cfg, outcomes);
}

}  // namespace sb3
