// Copyright 2026 The logag Authors
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

#include "logag/grade.hpp"

#include <cctype>
#include <limits>

#include "logag/error.hpp"

namespace logag {

namespace {

constexpr std::int64_t kMaxDigits = 17;

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > kMaxDigits) {
    throw InvalidArgument("malformed grade literal '" + std::string(whole) + "'");
  }
  std::int64_t out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidArgument("malformed grade literal '" + std::string(whole) +
                            "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

Grade::Grade(std::int64_t numerator, std::int64_t denominator)
    : Grade(Rational(numerator, denominator)) {}

Grade::Grade(Rational value) : value_(value) {
  if (value_ < 0) {
    throw InvalidArgument("grade must be non-negative");
  }
}

Grade Grade::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    throw InvalidArgument("negative grade literal '" + std::string(text) + "'");
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(text.substr(0, slash), text);
    std::int64_t den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) {
      throw InvalidArgument("zero denominator in grade '" + std::string(text) +
                            "'");
    }
    return Grade(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.size() + frac.size() > kMaxDigits) {
      throw InvalidArgument("grade literal too long '" + std::string(text) +
                            "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = parse_digits(whole, text);
    std::int64_t f = parse_digits(frac, text);
    return Grade(w * scale + f, scale);
  }
  return Grade(parse_digits(text, text));
}

std::string Grade::str() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" +
         std::to_string(value_.denominator());
}

}  // namespace logag
