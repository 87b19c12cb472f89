// Copyright 2026 The pathsum Authors
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
#include "pathsum/amplitude.h"

#include <cmath>

#include "pathsum/errors.h"

namespace pathsum {

Amplitude exp_action(ActionValue s) {
    if (!std::isfinite(s.s_over_hbar)) {
        throw DomainError("exp_action: action is not finite");
    }
    return {std::cos(s.s_over_hbar), std::sin(s.s_over_hbar)};
}

}  // namespace pathsum
