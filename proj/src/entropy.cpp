// Copyright 2026 The qgc Authors
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

#include "qgc/entropy.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qgc/error.h"

namespace qgc {

double binary_entropy(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "binary entropy argument " + std::to_string(r) + " outside [0, 1]");
    }
    if (r == 0.0 || r == 1.0) {
        return 0.0;
    }
    return -r * std::log2(r) - (1.0 - r) * std::log1p(-r) / std::numbers::ln2;
}

}  // namespace qgc
