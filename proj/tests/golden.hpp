// Copyright 2026 The OMFLP Authors
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

#ifndef OMFLP_TESTS_GOLDEN_HPP_
#define OMFLP_TESTS_GOLDEN_HPP_

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace omflp::testing {

// Compares text against tests/golden/<name>. With OMFLP_UPDATE_GOLDEN set
// the file is rewritten instead.
inline void check_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(OMFLP_GOLDEN_DIR) + "/" + name;
  if (std::getenv("OMFLP_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << text;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK_MESSAGE(buf.str() == text, "golden mismatch: " << name);
}

}  // namespace omflp::testing

#endif  // OMFLP_TESTS_GOLDEN_HPP_
