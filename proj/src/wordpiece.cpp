// Copyright 2026 The Booksum Authors.
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

#include "booksum/wordpiece.hpp"

#include <fstream>

#include "booksum/error.hpp"
#include "booksum/text.hpp"

namespace booksum {

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens) {
  Vocabulary v;
  for (const std::string& token : tokens) {
    if (token.empty()) {
      throw Error(ErrorCode::kConfigError, "empty vocabulary token");
    }
    int id = static_cast<int>(v.token_to_id_.size());
    auto [it, inserted] = v.token_to_id_.emplace(token, id);
    if (!inserted) {
      throw Error(ErrorCode::kConfigError,
                  "duplicate vocabulary token: " + token);
    }
    if (token == v.unk_token_) v.unk_id_ = id;
  }
  if (v.unk_id_ < 0) {
    v.unk_id_ = static_cast<int>(v.token_to_id_.size());
    v.token_to_id_.emplace(v.unk_token_, v.unk_id_);
  }
  return v;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfigError,
                "cannot open vocabulary file: " + path.string());
  }
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    tokens.push_back(line);
  }
  return from_tokens(tokens);
}

int Vocabulary::id_of(const std::string& token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? -1 : it->second;
}

bool Vocabulary::contains(const std::string& token) const {
  return token_to_id_.count(token) > 0;
}

std::vector<WordPiece> tokenize_word(std::string_view word,
                                     const Vocabulary& vocab) {
  std::vector<WordPiece> pieces;
  if (word.empty()) return pieces;
  auto unk = [&] {
    return std::vector<WordPiece>{{vocab.unk_token(), vocab.unk_id(), false}};
  };
  if (word.size() > vocab.max_word_chars()) return unk();

  std::size_t start = 0;
  while (start < word.size()) {
    std::size_t end = word.size();
    std::string match;
    int match_id = -1;
    while (end > start) {
      std::string candidate =
          (start > 0 ? vocab.continuation_prefix() : std::string()) +
          std::string(word.substr(start, end - start));
      int id = vocab.id_of(candidate);
      if (id >= 0) {
        match = std::move(candidate);
        match_id = id;
        break;
      }
      --end;
    }
    if (match_id < 0) return unk();
    pieces.push_back({std::move(match), match_id, start > 0});
    start = end;
  }
  return pieces;
}

std::vector<WordPiece> tokenize_text(std::string_view text,
                                     const Vocabulary& vocab,
                                     const WordPieceOptions& options) {
  std::string prepared =
      options.lowercase ? to_lower(text) : std::string(text);
  std::vector<WordPiece> out;
  for (const std::string& token : pre_tokenize(prepared)) {
    std::vector<WordPiece> pieces = tokenize_word(token, vocab);
    out.insert(out.end(), std::make_move_iterator(pieces.begin()),
               std::make_move_iterator(pieces.end()));
  }
  return out;
}

}  // namespace booksum
