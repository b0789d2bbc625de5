#include "core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace sobq {

namespace {
std::atomic<int> g_threads{1};
constexpr std::size_t kChunk = 8192;
}  // namespace

void set_thread_count(int n) { g_threads.store(n < 1 ? 1 : n); }

int thread_count() { return g_threads.load(); }

std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

void parallel_for_chunks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(n);
  const int workers = std::min<std::size_t>(g_threads.load(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      body(c * kChunk, std::min(n, (c + 1) * kChunk));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      body(c * kChunk, std::min(n, (c + 1) * kChunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

void chunked_reduce(std::size_t n, std::size_t n_sums, double* results,
                    const std::function<void(std::size_t, std::size_t, double*)>& chunk_body) {
  const std::size_t chunks = chunk_count(n);
  std::vector<double> partials(chunks * n_sums, 0.0);
  parallel_for_chunks(n, [&](std::size_t b, std::size_t e) {
    chunk_body(b, e, partials.data() + (b / kChunk) * n_sums);
  });
  for (std::size_t s = 0; s < n_sums; ++s) results[s] = 0.0;
  // fixed combination order: chunk 0, 1, 2, ...
  for (std::size_t c = 0; c < chunks; ++c)
    for (std::size_t s = 0; s < n_sums; ++s) results[s] += partials[c * n_sums + s];
}

double chunked_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
  double out = 0.0;
  chunked_reduce(n, 1, &out, [&](std::size_t b, std::size_t e, double* acc) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += term(i);
    acc[0] += s;
  });
  return out;
}

}  // namespace sobq
