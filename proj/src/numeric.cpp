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

#include "omflp/numeric.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "omflp/errors.hpp"

namespace omflp {
namespace {

double parse_decimal(std::string_view text, std::string_view whole) {
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("invalid number literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const double value = parse_decimal(text, text);
    if (!std::isfinite(value)) {
      throw ParseError("non-finite number '" + std::string(text) + "'");
    }
    return value;
  }
  const double num = parse_decimal(text.substr(0, slash), text);
  const double den = parse_decimal(text.substr(slash + 1), text);
  if (den == 0.0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return num / den;
}

}  // namespace omflp
