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

#pragma once

#include <array>

#include "graspkit/render.hpp"
#include "graspkit/tensor.hpp"

namespace graspkit {

/// Piecewise-linear jet colormap, fixed knots:
/// 0 -> (0,0,0.5), 0.125 -> (0,0,1), 0.375 -> (0,1,1),
/// 0.625 -> (1,1,0), 0.875 -> (1,0,0), 1 -> (0.5,0,0).
std::array<double, 3> jet_color(double t);

/// Depth to 3 x H x W jet-mapped tensor. Depth is clamped to [near, far]
/// and normalized; no-return pixels encode as depth = far.
Tensor encode_input(const DepthImage& depth, double near = 0.4, double far = 1.4);

}  // namespace graspkit
