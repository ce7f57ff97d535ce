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

// File helpers with error codes the command line maps to exit statuses.

#ifndef AFFORDEX_IO_H_
#define AFFORDEX_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace affordex {

// NotFound when the file cannot be opened.
absl::StatusOr<std::string> ReadFile(const std::string& path);

// Writes through a temporary file and renames it into place. Fails with
// PermissionDenied when the destination is not writable.
absl::Status WriteFile(const std::string& path, std::string_view content);

// WriteFile that also flushes the data to stable storage before the rename.
absl::Status WriteFileDurably(const std::string& path,
                              std::string_view content);

// Appends one line and flushes it to stable storage before returning.
// Fails with PermissionDenied when the file cannot be opened and Internal
// when the write or flush fails.
absl::Status AppendLineDurably(const std::string& path, std::string_view line);

// Creates the directory (and parents) if needed.
absl::Status EnsureDirectory(const std::string& path);

// Replaces each directory in `paths` by its regular files ending in
// `extension`, sorted by name. Other paths are kept as given. NotFound when a
// path does not exist.
absl::StatusOr<std::vector<std::string>> ExpandPaths(
    const std::vector<std::string>& paths, std::string_view extension);

}  // namespace affordex

#endif  // AFFORDEX_IO_H_
