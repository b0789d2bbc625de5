#pragma once

#include <cstddef>
#include <functional>

namespace sobq {

// Global worker count for node-wise loops. 1 disables threading.
void set_thread_count(int n);
int thread_count();

// Runs body(begin, end) over fixed-size chunks of [0, n). Chunk boundaries do
// not depend on the thread count, so any per-chunk output is identical for
// every worker configuration.
void parallel_for_chunks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& body);

// Number of chunks parallel_for_chunks will use for a loop of length n.
std::size_t chunk_count(std::size_t n);

// Deterministic sum of term(i) over [0, n): per-chunk partial sums are
// combined in chunk order, bit-identical for any thread count.
double chunked_sum(std::size_t n, const std::function<double(std::size_t)>& term);

// As chunked_sum but the chunk body fills partials itself; used by fused
// kernels that accumulate several reductions in one pass.
void chunked_reduce(std::size_t n, std::size_t n_sums, double* results,
                    const std::function<void(std::size_t, std::size_t, double*)>& chunk_body);

}  // namespace sobq
