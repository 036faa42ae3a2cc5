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

#include <functional>

namespace graspkit {

/// Runs fn(i) for i in [0, count). With jobs > 1 the indices are processed
/// by a worker pool; tasks must be independent and write only to their own
/// index so that results match a serial run exactly.
void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace graspkit
