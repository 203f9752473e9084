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

#ifndef BOOKSUM_WORDPIECE_H_
#define BOOKSUM_WORDPIECE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace booksum {

// Fixed subword vocabulary in the conventional vocab.txt layout: one token
// per line, the line number is the id. Continuation pieces carry the "##"
// prefix in the file. The [UNK] token is appended when a vocabulary does not
// list it.
class Vocabulary {
 public:
  static Vocabulary load(const std::filesystem::path& path);
  static Vocabulary from_tokens(const std::vector<std::string>& tokens);

  int id_of(const std::string& token) const;  // -1 when absent
  bool contains(const std::string& token) const;
  int unk_id() const { return unk_id_; }
  const std::string& unk_token() const { return unk_token_; }
  const std::string& continuation_prefix() const {
    return continuation_prefix_;
  }
  std::size_t size() const { return token_to_id_.size(); }
  std::size_t max_word_chars() const { return max_word_chars_; }
  void set_max_word_chars(std::size_t n) { max_word_chars_ = n; }

 private:
  std::unordered_map<std::string, int> token_to_id_;
  std::string continuation_prefix_ = "##";
  std::string unk_token_ = "[UNK]";
  int unk_id_ = -1;
  std::size_t max_word_chars_ = 100;
};

struct WordPiece {
  std::string surface;  // includes the "##" prefix on continuation pieces
  int id = -1;
  bool is_continuation = false;
};

struct WordPieceOptions {
  bool lowercase = true;  // uncased mode
};

// Greedy longest-match-first tokenization of a single whitespace-free word.
// Produces [UNK] when no vocabulary prefix matches at any step or the word
// exceeds max_word_chars.
std::vector<WordPiece> tokenize_word(std::string_view word,
                                     const Vocabulary& vocab);

// pre_tokenize followed by tokenize_word on every token.
std::vector<WordPiece> tokenize_text(std::string_view text,
                                     const Vocabulary& vocab,
                                     const WordPieceOptions& options = {});

}  // namespace booksum

#endif  // BOOKSUM_WORDPIECE_H_
