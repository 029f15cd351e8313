// Copyright 2026 The nfgt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NFGT_RNG_H_
#define NFGT_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace nfgt {

// Reproducible random source. The generator is std::mt19937_64 (fully
// specified by the C++ standard), and every distribution transform is coded
// explicitly below, so identical seeds give identical samples on any
// platform. Substreams are derived with SplitMix64.
inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent substream seed from (seed, key).
inline uint64_t DeriveSeed(uint64_t seed, uint64_t key) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(key + 0x9e3779b97f4a7c15ULL));
}

inline uint64_t DeriveSeed(uint64_t seed, uint64_t key1, uint64_t key2) {
  return DeriveSeed(DeriveSeed(seed, key1), key2);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53-bit resolution.
  double Uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Standard normal via Box-Muller (cosine branch; two uniforms per draw).
  double Normal() {
    double u1 = 1.0 - Uniform01();  // (0, 1]
    double u2 = Uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Uniform integer in [0, n).
  int UniformInt(int n) {
    return static_cast<int>(gen_() % static_cast<uint64_t>(n));
  }

  // Fisher-Yates permutation of [0, n).
  template <typename Container>
  void Shuffle(Container& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = UniformInt(i + 1);
      std::swap(v[i], v[j]);
    }
  }

  Rng Split(uint64_t key) { return Rng(DeriveSeed(gen_(), key)); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nfgt

#endif  // NFGT_RNG_H_
