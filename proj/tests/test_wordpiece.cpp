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

#include <doctest.h>

#include "booksum/error.hpp"
#include "support/test_support.hpp"

using namespace booksum;

namespace {

std::vector<std::string> surfaces(const std::vector<WordPiece>& pieces) {
  std::vector<std::string> out;
  for (const WordPiece& p : pieces) out.push_back(p.surface);
  return out;
}

std::string reconstruct(const std::vector<WordPiece>& pieces,
                        const Vocabulary& vocab) {
  std::string out;
  for (const WordPiece& p : pieces) {
    std::string_view s = p.surface;
    if (p.is_continuation) s.remove_prefix(vocab.continuation_prefix().size());
    out += s;
  }
  return out;
}

}  // namespace

TEST_CASE("whole-word vocabulary hits come back as one piece") {
  Vocabulary vocab = Vocabulary::from_tokens({"hello"});
  auto pieces = tokenize_word("hello", vocab);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].surface == "hello");
  CHECK(pieces[0].id == 0);
  CHECK_FALSE(pieces[0].is_continuation);
}

TEST_CASE("greedy longest-match-first decomposition") {
  Vocabulary vocab = Vocabulary::from_tokens({"un", "##aff", "##able"});
  CHECK(surfaces(tokenize_word("unaffable", vocab)) ==
        std::vector<std::string>{"un", "##aff", "##able"});

  Vocabulary greedy = Vocabulary::from_tokens({"ab", "##c", "a", "##bc"});
  CHECK(surfaces(tokenize_word("abc", greedy)) ==
        std::vector<std::string>{"ab", "##c"});
}

TEST_CASE("unmatched words collapse to the unk token") {
  Vocabulary vocab = Vocabulary::from_tokens({"a"});
  auto pieces = tokenize_word("xyz", vocab);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].surface == "[UNK]");
  CHECK(pieces[0].id == vocab.unk_id());

  // partial match with no continuation piece also sinks to UNK
  CHECK(surfaces(tokenize_word("ab", vocab)) ==
        std::vector<std::string>{"[UNK]"});
}

TEST_CASE("overlong words sink to unk") {
  Vocabulary vocab = Vocabulary::from_tokens({"a", "##a"});
  vocab.set_max_word_chars(4);
  CHECK(surfaces(tokenize_word("aaaaa", vocab)) ==
        std::vector<std::string>{"[UNK]"});
  CHECK(surfaces(tokenize_word("aaaa", vocab)) ==
        std::vector<std::string>{"a", "##a", "##a", "##a"});
}

TEST_CASE("tokenize_text composes pre_tokenize with tokenize_word") {
  Vocabulary vocab = Vocabulary::from_tokens({"hello", "hi", ","});
  CHECK(tokenize_text("", vocab).empty());
  CHECK(surfaces(tokenize_text("Hello, hi", vocab)) ==
        std::vector<std::string>{"hello", ",", "hi"});

  Vocabulary just_a = Vocabulary::from_tokens({"a"});
  CHECK(surfaces(tokenize_text("a a", just_a)) ==
        std::vector<std::string>{"a", "a"});

  // cased mode keeps the original case (and here falls to UNK)
  WordPieceOptions cased;
  cased.lowercase = false;
  CHECK(surfaces(tokenize_text("Hello", vocab, cased)) ==
        std::vector<std::string>{"[UNK]"});
}

TEST_CASE("bundled toy vocabulary loads with dense line-number ids") {
  Vocabulary vocab =
      Vocabulary::load(booksum_test::data_path("data/vocab_toy.txt"));
  CHECK(vocab.size() == 200);
  CHECK(vocab.id_of("[PAD]") == 0);
  CHECK(vocab.id_of("[UNK]") == 1);
  CHECK(vocab.unk_id() == 1);
  CHECK(vocab.contains("##a"));
}

TEST_CASE("duplicate vocabulary entries are rejected") {
  CHECK_THROWS_AS(Vocabulary::from_tokens({"a", "a"}), Error);
}

TEST_CASE("reconstruction and greedy-prefix properties") {
  Vocabulary vocab =
      Vocabulary::load(booksum_test::data_path("data/vocab_toy.txt"));
  booksum_test::Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t len = rng.between(1, 12);
    std::string word;
    for (std::size_t i = 0; i < len; ++i) {
      word.push_back(static_cast<char>('a' + rng.below(26)));
    }
    auto pieces = tokenize_word(word, vocab);
    REQUIRE_FALSE(pieces.empty());
    bool is_unk = pieces.size() == 1 && pieces[0].surface == "[UNK]";
    for (const WordPiece& p : pieces) {
      CHECK(vocab.contains(p.surface));
      CHECK(p.is_continuation ==
            (p.surface.rfind(vocab.continuation_prefix(), 0) == 0));
    }
    if (is_unk) continue;
    CHECK(reconstruct(pieces, vocab) == word);
    // first piece is the longest vocabulary prefix of the word
    for (std::size_t longer = pieces[0].surface.size() + 1;
         longer <= word.size(); ++longer) {
      CHECK_FALSE(vocab.contains(word.substr(0, longer)));
    }
  }
}
