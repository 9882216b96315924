// Copyright 2026 The mbcc Authors
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

#ifndef MBCC_ERRORS_H
#define MBCC_ERRORS_H

#include <stdexcept>

namespace mbcc {

/// Malformed textual input (netlists, program text, resource specs, distribution tables).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Misuse of a correlated resource: a second query to a party, a stale or
/// undersized resource supply, or a resource with the wrong party count.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mbcc

#endif
