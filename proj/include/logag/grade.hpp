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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace logag {

// Exact non-negative rational grade.
class Grade {
 public:
  using Rational = boost::rational<std::int64_t>;

  Grade() = default;
  Grade(std::int64_t numerator, std::int64_t denominator = 1);
  explicit Grade(Rational value);

  // Accepts "3", "2.5" and "5/2". Throws InvalidArgument on anything else,
  // including negative values.
  static Grade parse(std::string_view text);

  const Rational& value() const { return value_; }

  // "3" for integers, "5/2" otherwise.
  std::string str() const;

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Grade& a, const Grade& b) {
    return a.value_ < b.value_;
  }
  friend bool operator!=(const Grade& a, const Grade& b) { return !(a == b); }
  friend bool operator>(const Grade& a, const Grade& b) { return b < a; }
  friend bool operator<=(const Grade& a, const Grade& b) { return !(b < a); }
  friend bool operator>=(const Grade& a, const Grade& b) { return !(a < b); }

  friend Grade operator+(const Grade& a, const Grade& b) {
    return Grade(a.value_ + b.value_);
  }
  friend Grade operator/(const Grade& a, std::int64_t d) {
    return Grade(a.value_ / Rational(d));
  }

 private:
  Rational value_{0};
};

}  // namespace logag
