// Deterministic parallelism support.  Every sampling kernel writes results into
// index-addressed slots and derives its randomness from (seed, task-index), so
// the OpenMP path and the serial reference path produce bit-identical output.
#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>

namespace germ::parallel {

// 1 = serial reference path; 0 = library default (all OpenMP threads).
void set_threads(unsigned n);
unsigned threads();

// Runs body(0..n-1); order unspecified when parallel.  The first exception
// thrown by any task is rethrown on the calling thread after the join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Stable 64-bit stream split: fold the tag words into the seed with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

}  // namespace germ::parallel
