#pragma once

#include <cstdint>
#include <random>

namespace coaw {

/// Random stream used by every stochastic operation. One stream per run.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the k-th child stream. Depends only on (master, k), so runs can be
/// scheduled in any order.
constexpr std::uint64_t child_seed(std::uint64_t master, std::uint64_t k) noexcept {
  return mix64(mix64(master) ^ mix64(k + 0x632be59bd9b4e019ULL));
}

}  // namespace coaw
