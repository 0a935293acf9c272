#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace fixglue {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs body(begin, end, worker) over [0, total) split into contiguous chunks.
// Chunk boundaries depend only on (total, threads), never on scheduling.
template <typename Body>
void parallel_chunks(uint64_t total, int threads, Body&& body) {
  if (total == 0) return;
  uint64_t nw = std::min<uint64_t>(static_cast<uint64_t>(resolve_threads(threads)), total);
  if (nw <= 1) {
    body(uint64_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nw);
  uint64_t per = total / nw, extra = total % nw, start = 0;
  for (uint64_t w = 0; w < nw; ++w) {
    uint64_t len = per + (w < extra ? 1 : 0);
    pool.emplace_back([&body, start, len, w] { body(start, start + len, static_cast<int>(w)); });
    start += len;
  }
  for (auto& t : pool) t.join();
}

// Exact decimal string of the product of the factors ("1" for an empty list).
// Group orders can exceed 64 bits, so this avoids any fixed-width type.
std::string product_decimal(const std::vector<uint64_t>& factors);

// Saturating product; returns false on overflow.
bool checked_product(const std::vector<uint64_t>& factors, uint64_t& out);

}  // namespace fixglue
