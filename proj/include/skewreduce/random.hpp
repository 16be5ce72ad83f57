/*
   Copyright 2026 The skewreduce authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWREDUCE_RANDOM_HPP
#define SKEWREDUCE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "skewreduce/field.hpp"

namespace skewreduce {

// std::uniform_int_distribution is implementation-defined; these helpers keep
// every seeded run bit-reproducible across compilers.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline FieldElement uniform_element(const FieldContext& field,
                                    std::mt19937_64& rng) {
  return {static_cast<std::uint32_t>(uniform_below(rng, field.order()))};
}

inline FieldElement uniform_nonzero(const FieldContext& field,
                                    std::mt19937_64& rng) {
  return {static_cast<std::uint32_t>(1 + uniform_below(rng, field.order() - 1))};
}

/// splitmix64 step, used to derive independent per-trial seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace skewreduce

#endif  // SKEWREDUCE_RANDOM_HPP
