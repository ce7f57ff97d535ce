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
// Shared helpers for the tests: bundled resources, fixture paths and
// scratch directories.

#ifndef AFFORDEX_TESTS_TEST_UTIL_H_
#define AFFORDEX_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include "affordex/resources.h"
#include "affordex/trace.h"

namespace affordex::testing {

// The bundled language tables, loaded once.
const LanguageResources& Resources();

std::string TestDataPath(const std::string& name);
std::string FixturePath(const std::string& name);

// File contents; aborts the test binary when the file is missing.
std::string Slurp(const std::string& path);

// Splits a CSV file into rows of fields, skipping '#' comment lines.
std::vector<std::vector<std::string>> ReadCsv(const std::string& path);

// A fresh directory removed again on destruction.
class ScratchDir {
 public:
  ScratchDir();
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::string& path() const { return path_; }
  std::string File(const std::string& name) const {
    return path_ + "/" + name;
  }

 private:
  std::string path_;
};

// A step with the given fields and no optional data.
ScenarioStep MakeStep(const std::string& game, int index,
                      const std::string& location,
                      const std::string& description);

}  // namespace affordex::testing

#endif  // AFFORDEX_TESTS_TEST_UTIL_H_
