// Deterministic "find the first hit" helper used by the enumerating checkers.

#ifndef MONOIDLAB_DETAIL_PARALLEL_HPP_
#define MONOIDLAB_DETAIL_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace monoidlab::detail {

  enum class Probe { miss, hit, abort };

  struct FirstHit {
    std::size_t index   = 0;  // == count when nothing hit
    bool        aborted = false;
  };

  //! Evaluates `probe(i)` for i in [0, count) on up to `jobs` threads and
  //! returns the least i whose probe hit. Indices above the best hit found so
  //! far are skipped, indices below it are always evaluated, so the answer
  //! does not depend on scheduling. An abort from any probe stops all work.
  template <typename ProbeFn>
  FirstHit first_hit(std::size_t count, unsigned jobs, ProbeFn&& probe) {
    if (jobs <= 1 || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        switch (probe(i)) {
          case Probe::hit:
            return {i, false};
          case Probe::abort:
            return {count, true};
          case Probe::miss:
            break;
        }
      }
      return {count, false};
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::atomic<bool>        aborted{false};
    auto worker = [&] {
      while (!aborted.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count || i > best.load(std::memory_order_relaxed)) {
          return;
        }
        Probe p = probe(i);
        if (p == Probe::abort) {
          aborted.store(true);
          return;
        }
        if (p == Probe::hit) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back(worker);
    }
    pool.clear();
    if (aborted.load()) {
      return {count, true};
    }
    return {best.load(), false};
  }

}  // namespace monoidlab::detail

#endif  // MONOIDLAB_DETAIL_PARALLEL_HPP_
