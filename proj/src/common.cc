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

#include "mdepth/common.h"

namespace mdepth {

std::vector<int> Elements(Mask x) {
  std::vector<int> out;
  while (x != 0) {
    out.push_back(LowestElement(x));
    x &= x - 1;
  }
  return out;
}

Mask Compress(Mask x, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (Mask k = keep; k != 0; k &= k - 1) {
    const int e = LowestElement(k);
    if (Contains(x, e)) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

Mask Expand(Mask x, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (Mask k = keep; k != 0; k &= k - 1) {
    if ((x >> pos) & 1u) out |= Mask{1} << LowestElement(k);
    ++pos;
  }
  return out;
}

void CheckCap(bool ok, const std::string& what) {
  if (!ok) throw CapError("cap exceeded: " + what);
}

}  // namespace mdepth
