// Copyright 2026 The Descedit Authors.
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

// Seeded random streams. Everything random in augmentation draws from an Rng
// whose seed is derived from the run seed and the record id, so results do
// not depend on processing order or worker count.

#ifndef DESCEDIT_RNG_H_
#define DESCEDIT_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace descedit {

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view data);

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Per-record seed from the run seed and a record id.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view id);

// Thin wrapper over mt19937_64 with portable bounded draws. The standard
// distributions are implementation-defined, so they are not used here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi]; requires lo <= hi.
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();

 private:
  std::mt19937_64 engine_;
};

}  // namespace descedit

#endif  // DESCEDIT_RNG_H_
