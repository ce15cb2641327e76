//
// Copyright 2026 The MWPA Authors
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
//

#ifndef MWPA_COMMON_RANDOM_H_
#define MWPA_COMMON_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "absl/strings/string_view.h"

namespace mwpa {

// FNV-1a, 64 bit. Stable across platforms and runs, unlike std::hash.
uint64_t StableHash(absl::string_view data);

// Derives an independent stream seed, e.g. per problem id.
uint64_t DeriveSeed(uint64_t seed, absl::string_view salt);

// mt19937_64 output is fixed by the standard, but the std distributions are
// not, so bounded draws and shuffles are done here to keep runs reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  size_t Uniform(size_t n);

  // Uniform in [0, 1).
  double UniformDouble();

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = Uniform(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct indices from [0, n) in ascending order.
  std::vector<size_t> SampleIndices(size_t n, size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mwpa

#endif  // MWPA_COMMON_RANDOM_H_
