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

#ifndef PATHSUM_ERRORS_H
#define PATHSUM_ERRORS_H

#include <stdexcept>
#include <string>

namespace pathsum {

/// Invalid input: violated precondition, malformed geometry, degenerate configuration.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size cap (enumeration, settings count).
class ResourceError : public std::runtime_error {
   public:
    ResourceError(const std::string &what, unsigned long long cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {
    }
    unsigned long long cap() const {
        return cap_;
    }

   private:
    unsigned long long cap_;
};

}  // namespace pathsum

#endif
