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

#include "lexer.hpp"

#include <cctype>

#include "logag/error.hpp"

namespace logag::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "grade";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Less: return "'<'";
    case Tok::EqEq: return "'=='";
    case Tok::Eq: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(text.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    auto next = [&](std::size_t k) {
      return i + k < text.size() ? text[i + k] : '\0';
    };
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    if (digit(c)) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j + 1 < text.size() && (text[j] == '.' || text[j] == '/') &&
          digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      push(Tok::Number, j - i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '{': push(Tok::LBrace, 1); continue;
      case '}': push(Tok::RBrace, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case ':': push(Tok::Colon, 1); continue;
      case '~': push(Tok::Tilde, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      case '<': push(Tok::Less, 1); continue;
      default: break;
    }
    if (c == '-' && next(1) == '>') {
      push(Tok::Arrow, 2);
      continue;
    }
    if (c == '=' && next(1) == '>') {
      push(Tok::FatArrow, 2);
      continue;
    }
    if (c == '=' && next(1) == '=') {
      push(Tok::EqEq, 2);
      continue;
    }
    if (c == '=') {
      push(Tok::Eq, 1);
      continue;
    }
    if (c == '-' && digit(next(1))) {
      throw SyntaxError("negative grade literal", line, col);
    }
    throw SyntaxError(std::string("unknown operator '") + c + "'", line, col);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

}  // namespace logag::detail
