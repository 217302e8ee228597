// Parameter sweeps: enumerate valid (family, q, a, xi), fan the check
// battery out over a worker pool, and aggregate order-independent results
// into a deterministic report.

#ifndef ORTHO8_SWEEP_HPP_
#define ORTHO8_SWEEP_HPP_

#include <algorithm>
#include <atomic>
#include <thread>

#include "ortho8/registry.hpp"
#include "ortho8/rng.hpp"

namespace ortho8 {
namespace verify {

struct SweepConfig {
  std::vector<Family> families{Family::kPlusEven, Family::kPlusOdd, Family::kMinus2,
                               Family::kMinusEven, Family::kMinusOdd};
  std::uint32_t q_even_max = 16;
  std::uint32_t q_odd_max = 9;
  bool sample = false;          // exhaustive a when false
  std::uint32_t samples = 0;    // per field, when sampling
  std::uint64_t seed = 0;       // mandatory when sampling
  std::string checks = "*";     // glob over check ids
  bool symbolic = true;         // include the symbolic battery
  unsigned jobs = 0;            // 0 = hardware default / ORTHO8_JOBS
};

inline bool glob_match(const std::string& pattern, const std::string& s) {
  // '*' wildcards only
  std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
  while (i < s.size()) {
    if (p < pattern.size() && (pattern[p] == s[i])) {
      ++p;
      ++i;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

// prime powers of the given parity up to the bound, ascending
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers(bool even,
                                                                         std::uint32_t max) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  if (even) {
    for (std::uint32_t f = 1, q = 2; q <= max; ++f, q *= 2) out.push_back({2, f});
    return out;
  }
  std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>> tmp;
  for (std::uint32_t p = 3; p <= max; p += 2) {
    if (!gf::is_prime_u64(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t f = 1; q <= max; ++f, q *= p) tmp.push_back({q, {p, f}});
  }
  std::sort(tmp.begin(), tmp.end());
  for (auto& [q, pf] : tmp) out.push_back(pf);
  return out;
}

struct SweepTask {
  std::function<std::vector<CheckReport>()> run;
};

inline std::vector<SweepTask> plan_sweep(const SweepConfig& cfg) {
  std::vector<SweepTask> tasks;
  auto want_family = [&](Family f) {
    return std::find(cfg.families.begin(), cfg.families.end(), f) != cfg.families.end();
  };
  auto checks_filter = [pattern = cfg.checks](const CheckReport& rep) {
    return glob_match(pattern, rep.check_id);
  };

  auto add_pair_task = [&](Family fam, gf::FieldPtr F, std::optional<gf::Elt> a,
                           std::optional<gf::Elt> xi) {
    tasks.push_back(SweepTask{[fam, F, a, xi, checks_filter]() {
      std::vector<CheckReport> reps = generation_evidence(fam, F, a, xi);
      std::vector<CheckReport> kept;
      for (auto& r : reps)
        if (checks_filter(r)) kept.push_back(std::move(r));
      return kept;
    }});
  };

  auto a_values = [&](Family fam, const gf::FieldPtr& F,
                      std::optional<gf::Elt> xi) -> std::vector<gf::Elt> {
    auto all = generators::valid_a_values(fam, F, xi);
    if (!cfg.sample || all.size() <= cfg.samples) return all;
    // seeded LCG selection without replacement
    Lcg rng(cfg.seed ^ (static_cast<std::uint64_t>(F->q) << 32) ^ static_cast<int>(fam));
    std::vector<gf::Elt> picked;
    std::vector<bool> used(all.size(), false);
    while (picked.size() < cfg.samples) {
      std::uint32_t i = rng.next_below(static_cast<std::uint32_t>(all.size()));
      if (used[i]) continue;
      used[i] = true;
      picked.push_back(all[i]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  };

  for (Family fam : {Family::kPlusEven, Family::kMinusEven}) {
    if (!want_family(fam)) continue;
    for (auto [p, f] : prime_powers(true, cfg.q_even_max)) {
      auto F = gf::field_make(p, f);
      if (F->q < 4) continue;
      for (const auto& a : a_values(fam, F, std::nullopt)) add_pair_task(fam, F, a, std::nullopt);
    }
  }
  if (want_family(Family::kMinus2) && cfg.q_even_max >= 2)
    add_pair_task(Family::kMinus2, gf::field_make(2, 1), std::nullopt, std::nullopt);
  for (Family fam : {Family::kPlusOdd, Family::kMinusOdd}) {
    if (!want_family(fam)) continue;
    for (auto [p, f] : prime_powers(false, cfg.q_odd_max)) {
      auto F = gf::field_make(p, f);
      std::optional<gf::Elt> xi;
      if (fam == Family::kMinusOdd) xi = gf::find_nonsquare(F);
      if (fam == Family::kPlusOdd && F->q < 4) continue;
      for (const auto& a : a_values(fam, F, xi)) add_pair_task(fam, F, a, xi);
    }
  }

  // field-level Carlitz counts over the even sweep fields
  if (want_family(Family::kMinusEven) && glob_match(cfg.checks, "pol_irr.carlitz")) {
    for (auto [p, f] : prime_powers(true, cfg.q_even_max)) {
      if (f > 12) continue;
      auto F = gf::field_make(p, f);
      tasks.push_back(SweepTask{[F]() {
        return std::vector<CheckReport>{run_carlitz(F)};
      }});
    }
  }

  // the symbolic battery
  if (cfg.symbolic) {
    for (const auto& def : registry()) {
      if (!def.symbolic) continue;
      if (!glob_match(cfg.checks, def.id)) continue;
      for (std::uint32_t p : def.sym_primes) {
        // only run symbolic families the sweep asked for
        bool fam_wanted = false;
        for (Family f : def.families) {
          bool even_fam = (f == Family::kPlusEven || f == Family::kMinusEven || f == Family::kMinus2);
          if (want_family(f) && even_fam == (p == 2)) fam_wanted = true;
        }
        if (!fam_wanted) continue;
        const CheckDef* defp = &def;
        tasks.push_back(SweepTask{[defp, p]() {
          return std::vector<CheckReport>{run_symbolic(*defp, p)};
        }});
      }
    }
  }
  return tasks;
}

struct SweepResult {
  std::vector<CheckReport> reports;
  std::size_t passed = 0, failed = 0, skipped = 0, rejected = 0;
  double elapsed_seconds = 0.0;
};

inline void sort_reports(std::vector<CheckReport>& reports) {
  auto key = [](const CheckReport& r) {
    std::string fam = r.params.family ? generators::family_name(*r.params.family) : "";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%010u|%010u|%010u", r.params.q,
                  r.params.a_code ? *r.params.a_code + 1 : 0,
                  r.params.xi_code ? *r.params.xi_code + 1 : 0);
    return r.check_id + "|" + fam + "|" + buf + "|" + r.params.branch;
  };
  std::stable_sort(reports.begin(), reports.end(),
                   [&](const CheckReport& a, const CheckReport& b) { return key(a) < key(b); });
}

inline SweepResult run_sweep(const SweepConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  std::vector<SweepTask> tasks = plan_sweep(cfg);

  unsigned jobs = cfg.jobs;
  if (jobs == 0) {
    if (const char* env = std::getenv("ORTHO8_JOBS")) jobs = std::strtoul(env, nullptr, 10);
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
  }
  jobs = std::min<unsigned>(jobs, tasks.empty() ? 1 : static_cast<unsigned>(tasks.size()));

  std::vector<std::vector<CheckReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      slots[i] = tasks[i].run();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult result;
  for (auto& slot : slots)
    for (auto& rep : slot) result.reports.push_back(std::move(rep));
  sort_reports(result.reports);
  for (const auto& r : result.reports) {
    switch (r.status) {
      case Status::kPass:
        ++result.passed;
        break;
      case Status::kFail:
        ++result.failed;
        break;
      case Status::kSkipped:
        ++result.skipped;
        break;
      case Status::kRejected:
        ++result.rejected;
        break;
    }
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace verify
}  // namespace ortho8

#endif  // ORTHO8_SWEEP_HPP_
