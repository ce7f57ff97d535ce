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

#include "affordex/io.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fmt/format.h"

namespace affordex {

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

absl::Status WriteAll(int fd, const std::string& path, std::string_view data) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      return absl::InternalError(fmt::format("write to {} failed", path));
    }
    data.remove_prefix(static_cast<size_t>(n));
  }
  return absl::OkStatus();
}

absl::Status Replace(const std::string& path, std::string_view content,
                     bool durable) {
  const std::string tmp = path + ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) {
    return absl::PermissionDeniedError(fmt::format("cannot write {}", path));
  }
  absl::Status written = WriteAll(fd, path, content);
  if (written.ok() && durable && ::fsync(fd) != 0) {
    written = absl::InternalError(fmt::format("fsync of {} failed", path));
  }
  ::close(fd);
  if (!written.ok()) return written;
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        fmt::format("cannot replace {}: {}", path, ec.message()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status WriteFile(const std::string& path, std::string_view content) {
  return Replace(path, content, /*durable=*/false);
}

absl::Status WriteFileDurably(const std::string& path,
                              std::string_view content) {
  return Replace(path, content, /*durable=*/true);
}

absl::Status AppendLineDurably(const std::string& path, std::string_view line) {
  int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0) {
    return absl::PermissionDeniedError(fmt::format("cannot append to {}", path));
  }
  std::string buffer(line);
  buffer.push_back('\n');
  absl::Status written = WriteAll(fd, path, buffer);
  if (!written.ok()) {
    ::close(fd);
    return written;
  }
  int rc = ::fsync(fd);
  ::close(fd);
  if (rc != 0) {
    return absl::InternalError(fmt::format("fsync of {} failed", path));
  }
  return absl::OkStatus();
}

absl::Status EnsureDirectory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec || !std::filesystem::is_directory(path)) {
    return absl::PermissionDeniedError(
        fmt::format("cannot create directory {}", path));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<std::string>> ExpandPaths(
    const std::vector<std::string>& paths, std::string_view extension) {
  std::vector<std::string> out;
  for (const auto& path : paths) {
    std::error_code ec;
    if (!std::filesystem::is_directory(path, ec)) {
      if (!std::filesystem::exists(path, ec)) {
        return absl::NotFoundError(fmt::format("no such file: {}", path));
      }
      out.push_back(path);
      continue;
    }
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(path, ec)) {
      const std::string name = entry.path().string();
      if (entry.is_regular_file() && name.size() >= extension.size() &&
          name.compare(name.size() - extension.size(), extension.size(),
                       extension) == 0) {
        files.push_back(name);
      }
    }
    if (ec) {
      return absl::PermissionDeniedError(
          fmt::format("cannot list directory {}", path));
    }
    std::sort(files.begin(), files.end());
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

}  // namespace affordex
