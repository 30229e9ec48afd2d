// Copyright 2026 The Quadforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

namespace quadforge {

/// Worker count from QUADFORGE_WORKERS, or `fallback` when unset or invalid.
int worker_count_from_env(int fallback = 1);

/// Calls body(worker, index) for every index in [0, count). Worker `w`
/// handles indices w, w + workers, ..., so the partition is fixed by the
/// worker count alone.
void parallel_for(int count, int workers, const std::function<void(int, int)>& body);

}  // namespace quadforge
