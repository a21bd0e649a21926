#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "deptree/detail/parallel.hpp"
#include "deptree/error.hpp"
#include "deptree/features.hpp"
#include "deptree/generate.hpp"
#include "deptree/graphs.hpp"
#include "deptree/numeric.hpp"

namespace deptree {

enum class EstimationMode { exact, monte_carlo };

struct EstimationOptions {
  EstimationMode mode = EstimationMode::exact;
  std::uint64_t samples = 100000;  // Monte Carlo only
  std::uint64_t seed = 0;          // Monte Carlo only
  unsigned threads = 0;            // 0 = default_thread_count()
  std::uint64_t max_arrangements = 10'000'000;
  std::uint64_t max_trees = 1'000'000;
};

struct EstimationResult {
  EstimationMode mode = EstimationMode::exact;
  std::uint64_t samples = 0;  // ensemble size in exact mode
  std::uint64_t seed = 0;
  double mean = 0;
  double variance = 0;   // population variance (exact) or sample variance
  double std_error = 0;  // Monte Carlo only
  /// Raw moments E[X^k] for k = 1..4.
  std::vector<double> moments;
  /// Exact mode only.
  std::optional<Rational> exact_mean;
  std::optional<Rational> exact_variance;
  std::vector<Rational> exact_moments;
  /// Exact mode only: value -> number of ensemble members.
  std::map<Rational, std::uint64_t> distribution;
};

/// Number of samples per independently seeded Monte Carlo chunk. Chunk i
/// draws from Rng(Rng::derive_seed(seed, i)), so results depend only on the
/// seed and sample count, never on the number of workers.
inline constexpr std::uint64_t monte_carlo_chunk = 1024;

namespace detail {

inline EstimationResult summarise_exact(std::map<Rational, std::uint64_t> hist) {
  EstimationResult r;
  r.mode = EstimationMode::exact;
  BigInt total = 0;
  std::vector<Rational> sums(4, Rational(0));
  for (const auto& [x, c] : hist) {
    total += c;
    Rational p = x;
    for (int k = 0; k < 4; ++k) {
      sums[k] += p * c;
      p *= x;
    }
  }
  for (auto& s : sums) s /= Rational(total);
  r.samples = static_cast<std::uint64_t>(total);
  r.exact_mean = sums[0];
  r.exact_variance = sums[1] - sums[0] * sums[0];
  r.exact_moments = sums;
  r.mean = to_double(sums[0]);
  r.variance = to_double(*r.exact_variance);
  for (const auto& s : sums) r.moments.push_back(to_double(s));
  r.distribution = std::move(hist);
  return r;
}

struct ChunkSums {
  double s[4] = {0, 0, 0, 0};
};

/// Runs `draw(rng)` `samples` times over seeded chunks in parallel and
/// merges the chunk sums in chunk order.
template <typename MakeWorker>
EstimationResult monte_carlo(std::uint64_t samples, std::uint64_t seed, unsigned threads, MakeWorker make_worker) {
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs at least one sample");
  const std::uint64_t chunks = (samples + monte_carlo_chunk - 1) / monte_carlo_chunk;
  std::vector<ChunkSums> sums(chunks);
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  auto run = [&](unsigned worker) {
    auto draw = make_worker();
    for (std::uint64_t c = worker; c < chunks; c += threads) {
      Rng rng(Rng::derive_seed(seed, c));
      const std::uint64_t count = std::min(monte_carlo_chunk, samples - c * monte_carlo_chunk);
      ChunkSums& s = sums[c];
      for (std::uint64_t i = 0; i < count; ++i) {
        const double x = draw(rng);
        double p = x;
        for (double& acc : s.s) {
          acc += p;
          p *= x;
        }
      }
    }
  };
  if (threads <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex m;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          std::lock_guard lock(m);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  double total[4] = {0, 0, 0, 0};
  for (const auto& s : sums) {
    for (int k = 0; k < 4; ++k) total[k] += s.s[k];
  }
  EstimationResult r;
  r.mode = EstimationMode::monte_carlo;
  r.samples = samples;
  r.seed = seed;
  const double n = static_cast<double>(samples);
  for (double t : total) r.moments.push_back(t / n);
  r.mean = r.moments[0];
  const double ss = std::max(0.0, total[1] - n * r.mean * r.mean);
  r.variance = samples > 1 ? ss / (n - 1) : 0.0;
  r.std_error = std::sqrt(r.variance / n);
  return r;
}

inline Rational require_value(const Feature& f, const std::optional<Rational>& v) {
  if (!v) throw Error(ErrorCode::InvalidArgument, "feature '" + f.name + "' is undefined for this tree size");
  return *v;
}

}  // namespace detail

/// Mean (and higher moments) of an arrangement-dependent feature over all
/// arrangements of `t` satisfying the constraint, or over random ones.
inline EstimationResult estimate_over_arrangements(const RootedTree& t, std::string_view metric, Constraint constraint,
                                                   const EstimationOptions& options = {}) {
  const Feature& f = find_feature(metric);
  if (!f.arrangement_dependent) {
    throw Error(ErrorCode::KindMismatch, "feature '" + f.name + "' does not depend on the arrangement");
  }
  if (options.mode == EstimationMode::exact) {
    const BigInt size = count_arrangements(t, constraint);
    if (size > options.max_arrangements) {
      throw Error(ErrorCode::EnsembleTooLarge,
                  "ensemble has " + size.str() + " arrangements, limit " + std::to_string(options.max_arrangements));
    }
    std::map<Rational, std::uint64_t> hist;
    ArrangementEnumerator e(t, constraint, t.num_vertices());
    for (; !e.done(); e.advance()) ++hist[detail::require_value(f, f.compute(t, e.current()))];
    return detail::summarise_exact(std::move(hist));
  }
  return detail::monte_carlo(options.samples, options.seed, options.threads, [&] {
    return [&](Rng& rng) { return to_double(detail::require_value(f, f.compute(t, random_arrangement(t, constraint, rng)))); };
  });
}

inline EstimationResult estimate_over_arrangements(const FreeTree& t, std::string_view metric, Constraint constraint,
                                                   const EstimationOptions& options = {}) {
  const Feature& f = find_feature(metric);
  if (f.rooted || constraint == Constraint::projective) {
    throw Error(ErrorCode::KindMismatch, "'" + f.name + "' under " + std::string(to_string(constraint)) +
                                             " arrangements needs a rooted tree");
  }
  return estimate_over_arrangements(RootedTree::root_at(t, 1), metric, constraint, options);
}

/// Mean of an order-independent feature over all trees of a kind on n
/// vertices, or over uniformly random ones.
inline EstimationResult estimate_over_trees(TreeKind kind, std::size_t n, std::string_view metric,
                                            const EstimationOptions& options = {}) {
  const Feature& f = find_feature(metric);
  if (f.arrangement_dependent) {
    throw Error(ErrorCode::KindMismatch, "feature '" + f.name + "' depends on the arrangement");
  }
  if (f.rooted && !kind.rooted()) {
    throw Error(ErrorCode::KindMismatch, "feature '" + f.name + "' needs rooted trees");
  }
  const Arrangement identity = Arrangement::identity(n);
  if (options.mode == EstimationMode::exact) {
    const BigInt size = count_trees(kind, n);
    if (size > options.max_trees) {
      throw Error(ErrorCode::EnsembleTooLarge,
                  "ensemble has " + size.str() + " trees, limit " + std::to_string(options.max_trees));
    }
    std::map<Rational, std::uint64_t> hist;
    for (TreeEnumerator e(kind, n); !e.done(); e.advance()) {
      ++hist[detail::require_value(f, f.compute(e.rooted(), identity))];
    }
    return detail::summarise_exact(std::move(hist));
  }
  return detail::monte_carlo(options.samples, options.seed, options.threads, [&] {
    return [&, gen = RandomTreeGenerator(kind, n)](Rng& rng) mutable {
      return to_double(detail::require_value(f, f.compute(gen.rooted(rng), identity)));
    };
  });
}

}  // namespace deptree
