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

#include "graspkit/decode.hpp"
#include "graspkit/gripper.hpp"
#include "graspkit/orientation.hpp"
#include "graspkit/scene.hpp"

namespace graspkit {

enum class SimResult {
  Success,
  ApproachCollision,
  NoContact,
  NotForceClosure,
  NoProposal,
};

const char* to_string(SimResult r);

struct SimOutcome {
  SimResult result = SimResult::NoProposal;
  double swept_distance = 0.0;  // distance traveled before a collision stop
  double closure_width = 0.0;   // contact separation at closure
};

struct SimParams {
  ApproachParams approach;  // shared with orientation selection
  double mu_sim = 0.5;
};

/// Quasi-static grasp execution: sweep the open gripper linearly along the
/// grasp z-axis to the proposal pose, close the jaws by casting between the
/// finger planes, and test force closure at the resulting contacts.
SimOutcome simulate_grasp(const Scene& scene, const GraspProposal& proposal,
                          const GripperModel& gripper, const SimParams& params = {});

}  // namespace graspkit
