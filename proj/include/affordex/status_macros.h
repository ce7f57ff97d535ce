// Copyright 2026 The Affordex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AFFORDEX_STATUS_MACROS_H_
#define AFFORDEX_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#include <string>

namespace affordex {

// The message of `status` as a std::string, for formatting.
inline std::string StatusText(const ::absl::Status& status) {
  return std::string(status.message());
}

}  // namespace affordex

#define AFFORDEX_STATUS_CONCAT_INNER_(a, b) a##b
#define AFFORDEX_STATUS_CONCAT_(a, b) AFFORDEX_STATUS_CONCAT_INNER_(a, b)

// Returns early from the enclosing function if `expr` is not OK.
#define AFFORDEX_RETURN_IF_ERROR(expr)               \
  do {                                               \
    const ::absl::Status _affordex_status = (expr);  \
    if (!_affordex_status.ok()) return _affordex_status; \
  } while (0)

// Evaluates a StatusOr expression, returning its error or binding the value.
#define AFFORDEX_ASSIGN_OR_RETURN(lhs, expr)                             \
  AFFORDEX_ASSIGN_OR_RETURN_IMPL_(                                       \
      AFFORDEX_STATUS_CONCAT_(_affordex_statusor_, __LINE__), lhs, expr)

#define AFFORDEX_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, expr) \
  auto statusor = (expr);                                    \
  if (!statusor.ok()) return statusor.status();              \
  lhs = std::move(statusor).value()

#endif  // AFFORDEX_STATUS_MACROS_H_
