// Copyright 2026 The sdnc Authors
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

#include <cmath>

#include "sdnc/good4.hpp"

namespace sdnc {

BoundReport bounds(std::size_t n, std::size_t w, std::size_t m, std::size_t k) {
  BoundReport r;
  r.n = n;
  r.w = w;
  r.m = m;
  r.k = k;
  const long double ln_n = n == 0 ? 0.0L : std::log(static_cast<long double>(n));
  const long double w4 = std::pow(static_cast<long double>(w), 4.0L);
  r.binary_bound = static_cast<double>(3.0L * w4 * ln_n);
  r.near_convex_bound = static_cast<double>(4.0L * m + 3.0L * w4 * ln_n);
  const long double kk = static_cast<long double>(k);
  r.multiclass_bound = static_cast<double>(
      std::pow(2.0L, kk) * std::ceil(ln_n * std::pow(static_cast<long double>(w), 4.0L * kk)) +
      std::pow(w4 + 3.0L, kk));
  return r;
}

}  // namespace sdnc
