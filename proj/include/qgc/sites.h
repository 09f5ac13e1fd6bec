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

#include <cstddef>
#include <string>
#include <vector>

namespace qgc {

/// Sorted set of output-site indices, each in [0, n).
class ErrorSubset {
   public:
    ErrorSubset() = default;
    /// Sorts the sites; throws InvalidSubset on duplicates or indices >= n.
    ErrorSubset(std::vector<std::size_t> sites, std::size_t n);

    const std::vector<std::size_t> &sites() const noexcept {
        return sites_;
    }
    std::size_t size() const noexcept {
        return sites_.size();
    }
    bool empty() const noexcept {
        return sites_.empty();
    }
    bool contains(std::size_t site) const;

    std::string to_string() const;

    bool operator==(const ErrorSubset &) const = default;

   private:
    std::vector<std::size_t> sites_;
};

}  // namespace qgc
