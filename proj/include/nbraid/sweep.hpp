#pragma once

// Formula/pipeline agreement over a parameter grid, evaluated in parallel.

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "index.hpp"
#include "nbridge.hpp"
#include "permutation.hpp"

namespace nbraid {

struct SweepBounds {
  int wmax = 6;
  int tmax = 6;
  int nmax = 3;
};

struct SweepOptions {
  Verify verify = Verify::oracle;
  bool verify_alexander = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRecord {
  NBridgeParams params;
  int formula_index = 0;
  int pipeline_index = 0;
  CaseTag case_tag = CaseTag::C1;
  bool certificate_valid = false;
  std::string status;  // "valid" or the failure reason
  int components = 0;

  bool agrees() const { return certificate_valid && formula_index == pipeline_index; }
};

struct SweepReport {
  SweepBounds bounds;
  std::vector<SweepRecord> records;  // grid order: w, b, t, n ascending

  std::size_t agreeing() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.agrees(); }));
  }
  std::size_t knots() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.components == 1; }));
  }
  bool all_agree() const { return agreeing() == records.size(); }
};

/// Valid tuples with 2 <= w <= wmax, 1 <= b < w, 1 <= t <= tmax, 1 <= n <= nmax.
inline std::vector<NBridgeParams> sweep_grid(const SweepBounds& bounds) {
  std::vector<NBridgeParams> grid;
  for (int w = 2; w <= bounds.wmax; ++w)
    for (int b = 1; b <= w - 1; ++b)
      for (int t = 1; t <= bounds.tmax; ++t)
        for (int n = 1; n <= bounds.nmax; ++n) grid.push_back({w, b, t, n});
  return grid;
}

inline SweepRecord sweep_one(const NBridgeParams& p, const SweepOptions& opt) {
  SweepRecord r;
  r.params = p;
  const IndexResult f = braid_index_formula(p);
  r.formula_index = f.index;
  r.case_tag = f.case_tag;
  r.components = underlying_permutation(nbridge_word(p)).cycle_count();
  try {
    const IndexCertificate c = reduce_to_full_twist(p, opt.verify);
    r.pipeline_index = c.final_word.strands();
    const Verdict v = check_certificate(c, opt.verify, opt.verify_alexander);
    r.certificate_valid = v.valid;
    r.status = v.to_string();
  } catch (const std::exception& e) {
    r.status = std::string("pipeline error: ") + e.what();
  }
  return r;
}

inline SweepReport run_sweep(const SweepBounds& bounds, const SweepOptions& opt = {}) {
  SweepReport report;
  report.bounds = bounds;
  const std::vector<NBridgeParams> grid = sweep_grid(bounds);
  report.records.resize(grid.size());
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < grid.size(); k = next++) report.records[k] = sweep_one(grid[k], opt);
      });
  }
  return report;
}

}  // namespace nbraid
