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

#pragma once

namespace qgc {

/// H2(r) = -r log2 r - (1-r) log2(1-r) on [0, 1], with H2(0) = H2(1) = 0.
/// Throws ParamOutOfRange outside [0, 1].
double binary_entropy(double r);

}  // namespace qgc
