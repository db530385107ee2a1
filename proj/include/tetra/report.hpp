/**
 * @file report.hpp
 * @brief Outcome of a verification sweep and a deterministic parallel driver.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace tetra {

struct Counterexample {
  std::size_t ordinal = 0;  ///< position in the sweep; smallest wins on merge
  std::vector<int> indices;
  std::string where;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string id;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  ///< points outside the relation's domain
  std::optional<Counterexample> first_failure;

  [[nodiscard]] bool pass() const noexcept { return failures == 0; }

  void ok() { ++checked; }

  void fail(Counterexample c) {
    ++checked;
    ++failures;
    if (!first_failure || c.ordinal < first_failure->ordinal) first_failure = std::move(c);
  }

  /// Records an equality test; the strings are only built on failure.
  template <typename T>
  bool expect_equal(const T& lhs, const T& rhs, std::size_t ordinal, const std::vector<int>& indices,
                    const std::string& where = {}) {
    if (lhs == rhs) {
      ok();
      return true;
    }
    fail({ordinal, indices, where, to_text(lhs), to_text(rhs)});
    return false;
  }

  void merge(const Report& o) {
    checked += o.checked;
    failures += o.failures;
    skipped += o.skipped;
    if (o.first_failure && (!first_failure || o.first_failure->ordinal < first_failure->ordinal))
      first_failure = o.first_failure;
  }

 private:
  template <typename T>
  static std::string to_text(const T& x) {
    if constexpr (requires { x.str(); }) return x.str();
    else if constexpr (requires { std::to_string(x); }) return std::to_string(x);
    else return "<value>";
  }
};

/// Number of worker threads used by sweeps; 0 means hardware concurrency.
inline std::atomic<unsigned>& parallelism() {
  static std::atomic<unsigned> jobs{0};
  return jobs;
}

inline unsigned effective_jobs() {
  unsigned j = parallelism().load();
  if (j == 0) j = std::max(1U, std::thread::hardware_concurrency());
  return j;
}

/// Runs body(k, report) for k in [0, count) on worker threads (strided
/// assignment) and merges the per-worker reports. The result does not depend
/// on the number of workers.
inline Report parallel_sweep(const std::string& id, std::size_t count,
                             const std::function<void(std::size_t, Report&)>& body) {
  const unsigned jobs = static_cast<unsigned>(std::min<std::size_t>(effective_jobs(), std::max<std::size_t>(count, 1)));
  std::vector<Report> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t k = w; k < count; k += jobs) body(k, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Report r;
  r.id = id;
  for (const auto& p : parts) r.merge(p);
  return r;
}

/// Maps f over [0, count) in parallel, keeping results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  parallel_sweep("map", count, [&](std::size_t k, Report&) { out[k] = f(k); });
  return out;
}

}  // namespace tetra
