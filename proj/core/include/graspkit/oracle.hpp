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

#include "graspkit/grasp_map.hpp"
#include "graspkit/tensor.hpp"

namespace graspkit {

inline constexpr double kOracleHigh = 1.0 - 1e-6;
inline constexpr double kOracleLow = 1e-6;

/// Ground-truth-backed predictor standing in for a trained network:
/// quality saturates at positive entries, rotation and width are copied
/// from the entries, identity/zero elsewhere.
Tensor oracle_predict(const SparseGraspMap& map, int width, int height);

/// TCP-variant oracle: adds the grasp-center depth-offset channel derived
/// from each entry.
Tensor oracle_predict_tcp(const SparseGraspMap& map, const CameraIntrinsics& intrinsics);

struct PerturbParams {
  double quality_sigma = 0.0;   // additive Gaussian on the quality plane
  double rotation_sigma = 0.0;  // rad, small random rotation at entries
  double width_sigma = 0.0;     // m, at entries
};

/// Oracle with controlled degradation; enables threshold sweeps without a
/// trained model. Deterministic per seed.
Tensor perturbed_oracle(const SparseGraspMap& map, int width, int height,
                        const PerturbParams& params, std::uint64_t seed);

}  // namespace graspkit
