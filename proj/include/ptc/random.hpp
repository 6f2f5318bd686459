// Copyright 2026 The ptc Authors
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

#ifndef PTC_RANDOM_HPP
#define PTC_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "ptc/graph.hpp"
#include "ptc/rational.hpp"

namespace ptc {

/// G(n, p) sample. Pairs u < v are visited in lexicographic order and each
/// draws one value uniform on [0, den(p)) from std::mt19937_64 by rejection,
/// so the output depends only on (n, p, seed).
inline Graph random_graph(int n, Rational p, std::uint64_t seed) {
  if (n < 1 || n > 64) throw std::invalid_argument("need 1 <= n <= 64");
  if (p < Rational(0) || Rational(1) < p) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  const auto den = static_cast<std::uint64_t>(p.den());
  const auto num = static_cast<std::uint64_t>(p.num());
  // Largest multiple of den that fits, so x % den is unbiased below it.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % den;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::uint64_t x;
      do {
        x = rng();
      } while (x >= limit);
      if (x % den < num) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

}  // namespace ptc

#endif  // PTC_RANDOM_HPP
