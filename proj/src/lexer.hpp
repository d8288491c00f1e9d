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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace logag::detail {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Colon,
  Tilde,
  Amp,
  Bar,
  Arrow,     // ->
  FatArrow,  // =>
  Less,
  EqEq,
  Eq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Splits `text` into tokens. `#` starts a comment that runs to end of line.
// Throws SyntaxError on characters outside the shared grammar alphabet.
std::vector<Token> tokenize(std::string_view text);

const char* describe(Tok kind);

}  // namespace logag::detail
