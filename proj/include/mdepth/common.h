// Copyright 2023 The Authors.
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

#ifndef MDEPTH_COMMON_H_
#define MDEPTH_COMMON_H_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdepth {

// Subsets of a ground set [n] with n <= 16, bit i set iff element i present.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

inline int Popcount(Mask x) { return std::popcount(x); }
inline Mask FullMask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool Contains(Mask set, int e) { return (set >> e) & 1u; }
inline int LowestElement(Mask x) { return std::countr_zero(x); }

std::vector<int> Elements(Mask x);

// Packs the bits of `x` that lie in `keep` into the low bits, in order.
Mask Compress(Mask x, Mask keep);
// Inverse of Compress: spreads the low bits of `x` onto the positions of
// `keep`.
Mask Expand(Mask x, Mask keep);

// Raised for malformed input: parse failures, invalid masks, invalid
// extension specifications and similar.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an instance exceeds a configured enumeration or size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void CheckCap(bool ok, const std::string& what);

}  // namespace mdepth

#endif  // MDEPTH_COMMON_H_
