// Copyright 2026 The Graspkit Authors
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

#include "graspkit/encoding.hpp"

#include <algorithm>

namespace graspkit {
namespace {

constexpr int kKnots = 6;
constexpr double kT[kKnots] = {0.0, 0.125, 0.375, 0.625, 0.875, 1.0};
constexpr double kR[kKnots] = {0.0, 0.0, 0.0, 1.0, 1.0, 0.5};
constexpr double kG[kKnots] = {0.0, 0.0, 1.0, 1.0, 0.0, 0.0};
constexpr double kB[kKnots] = {0.5, 1.0, 1.0, 0.0, 0.0, 0.0};

}  // namespace

std::array<double, 3> jet_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  int seg = 0;
  while (seg + 2 < kKnots && t > kT[seg + 1]) ++seg;
  const double s = (t - kT[seg]) / (kT[seg + 1] - kT[seg]);
  return {kR[seg] + s * (kR[seg + 1] - kR[seg]), kG[seg] + s * (kG[seg + 1] - kG[seg]),
          kB[seg] + s * (kB[seg + 1] - kB[seg])};
}

Tensor encode_input(const DepthImage& depth, double near, double far) {
  if (near >= far) throw std::invalid_argument("encode_input: near must be < far");
  Tensor out(3, depth.height, depth.width);
  const double inv_range = 1.0 / (far - near);
  for (int v = 0; v < depth.height; ++v) {
    for (int u = 0; u < depth.width; ++u) {
      double z = depth.at(u, v);
      if (z <= 0.0) z = far;  // no-return encodes as the far bound
      const double t = (std::clamp(z, near, far) - near) * inv_range;
      const auto rgb = jet_color(t);
      out.at(0, v, u) = rgb[0];
      out.at(1, v, u) = rgb[1];
      out.at(2, v, u) = rgb[2];
    }
  }
  return out;
}

}  // namespace graspkit
