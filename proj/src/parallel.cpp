#include "germ/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace germ::parallel {

namespace {
std::atomic<unsigned> g_threads{0};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}
}  // namespace

void set_threads(unsigned n) { g_threads.store(n); }

unsigned threads() {
  unsigned n = g_threads.load();
  if (n != 0) return n;
#ifdef _OPENMP
  return static_cast<unsigned>(omp_get_max_threads());
#else
  return 1;
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned nthreads = threads();
  if (nthreads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr first_error;
  std::mutex error_mutex;
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 1)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  std::uint64_t acc = splitmix64(seed);
  for (std::uint64_t w : words) acc = splitmix64(acc ^ w);
  return acc;
}

}  // namespace germ::parallel
