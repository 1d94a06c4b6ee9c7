// Copyright 2026 The smcsa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace smcsa {

/// The engine behind every random stream in the library.
using Engine = std::mt19937_64;

/// Mixes a 64-bit value (SplitMix64 finalizer).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives a child seed from a parent seed and a list of stream coordinates,
/// e.g. derive_seed(master, iteration, particle).
template <typename... Coords>
std::uint64_t derive_seed(std::uint64_t seed, Coords... coords) noexcept {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  ((h = mix64(h ^ (static_cast<std::uint64_t>(coords) + 0x9e3779b97f4a7c15ULL))), ...);
  return h;
}

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

// The variate transforms below are spelled out instead of using the
// <random> distributions, whose algorithms are implementation-defined.
// Every stream is therefore bit-identical across standard libraries.

/// Uniform on [0, 1) with 53 random bits.
double uniform01(Engine& rng) noexcept;

/// Uniform on (0, 1): never returns 0.
double uniform_open01(Engine& rng) noexcept;

/// Standard normal via the Marsaglia polar method (one value per call).
double standard_normal(Engine& rng) noexcept;

/// Cauchy(location, scale) by inversion.
double cauchy(Engine& rng, double location, double scale) noexcept;

/// Unbiased integer in [0, n), n >= 1.
std::uint64_t uniform_index(Engine& rng, std::uint64_t n) noexcept;

}  // namespace smcsa
