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

#include "booksum/ingest.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "booksum/error.hpp"
#include "booksum/text.hpp"
#include "support/test_support.hpp"

using namespace booksum;

namespace {

RawDocument txt_doc(std::string_view bytes) {
  RawDocument doc;
  doc.source_id = "test";
  doc.format = InputFormat::kTxt;
  doc.payload.assign(bytes.begin(), bytes.end());
  return doc;
}

std::vector<std::string> sentence_texts(const std::vector<Sentence>& ss) {
  std::vector<std::string> out;
  for (const Sentence& s : ss) out.push_back(s.text);
  return out;
}

void check_span_invariants(std::string_view text,
                           const std::vector<Sentence>& sentences) {
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& s = sentences[i];
    CHECK(s.index == i);
    CHECK(s.span_begin < s.span_end);
    CHECK(s.span_end <= text.size());
    // verbatim preservation
    CHECK(text.substr(s.span_begin, s.span_end - s.span_begin) == s.text);
    CHECK_FALSE(trim(s.text).empty());
    // gaps between spans hold only whitespace
    for (std::size_t p = cursor; p < s.span_begin; ++p) {
      CHECK(is_ascii_space(text[p]));
    }
    cursor = s.span_end;
  }
  for (std::size_t p = cursor; p < text.size(); ++p) {
    CHECK(is_ascii_space(text[p]));
  }
}

}  // namespace

TEST_CASE("extract_text passes plaintext through") {
  CHECK(extract_text(txt_doc("hello"), nullptr) == "hello");
}

TEST_CASE("extract_text rejects invalid utf-8 and empty payloads") {
  try {
    extract_text(txt_doc("bad\xFF"), nullptr);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUndecodableInput);
  }
  try {
    extract_text(txt_doc(""), nullptr);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyDocument);
  }
}

TEST_CASE("pdf without a backend fails") {
  RawDocument doc = txt_doc("%PDF-1.4");
  doc.format = InputFormat::kPdf;
  try {
    extract_text(doc, nullptr);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kExtractionFailed);
  }
}

TEST_CASE("segment_sentences basic splits") {
  CHECK(segment_sentences("").empty());
  CHECK(segment_sentences("   \n ").empty());
  CHECK(sentence_texts(segment_sentences("hello world")) ==
        std::vector<std::string>{"hello world"});
  CHECK(sentence_texts(segment_sentences("A cat sat. Did it? Yes!")) ==
        std::vector<std::string>{"A cat sat.", "Did it?", "Yes!"});
}

TEST_CASE("segment_sentences handles punctuation runs and case rules") {
  CHECK(sentence_texts(segment_sentences("Really?! Yes indeed.")) ==
        std::vector<std::string>{"Really?!", "Yes indeed."});
  // no split when the next word is lowercase
  CHECK(sentence_texts(segment_sentences("version 2. update now")) ==
        std::vector<std::string>{"version 2. update now"});
  // terminal punctuation at end of text
  CHECK(sentence_texts(segment_sentences("Stop here.  ")) ==
        std::vector<std::string>{"Stop here."});
}

TEST_CASE("segment_sentences guards the abbreviation list") {
  CHECK(sentence_texts(segment_sentences("Mr. Smith went home. He left.")) ==
        std::vector<std::string>{"Mr. Smith went home.", "He left."});
  CHECK(sentence_texts(segment_sentences("See e.g. Apples are fine. Next.")) ==
        std::vector<std::string>{"See e.g. Apples are fine.", "Next."});
  CHECK(sentence_texts(segment_sentences("Dr. Watson nodded. Indeed.")) ==
        std::vector<std::string>{"Dr. Watson nodded.", "Indeed."});
}

TEST_CASE("segment_sentences span invariants on random text") {
  booksum_test::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text =
        booksum_test::random_document_text(rng, rng.between(1, 40));
    check_span_invariants(text, segment_sentences(text));
  }
}

TEST_CASE("clean_sentence removes stopwords and punctuation only") {
  Stopwords the = Stopwords::from_words({"the"}, "t");
  CHECK(clean_sentence("the cat", the) == std::vector<std::string>{"cat"});
  CHECK(clean_sentence("cat,", Stopwords::none()) ==
        std::vector<std::string>{"cat"});
  CleanOptions stemmed;
  stemmed.stem = true;
  CHECK(clean_sentence("Running quickly", Stopwords::none(), stemmed) ==
        std::vector<std::string>{"run", "quickli"});
}

TEST_CASE("build_document fills clean tokens but never touches text") {
  Stopwords sw = Stopwords::builtin_english();
  CleanDocument doc =
      build_document("d", "The cat sat. A dog, barked!", sw);
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].text == "The cat sat.");
  CHECK(doc.sentences[0].clean_tokens ==
        std::vector<std::string>{"cat", "sat"});
  CHECK(doc.sentences[1].clean_tokens ==
        std::vector<std::string>{"dog", "barked"});
  CHECK(doc.stopword_list_id == "builtin:en");
  for (const Sentence& s : doc.sentences) {
    for (const std::string& t : s.clean_tokens) {
      CHECK_FALSE(sw.contains(t));
      CHECK_FALSE(is_pure_punct(t));
      CHECK(to_lower(t) == t);
    }
  }
}

TEST_CASE("bundled stopword file matches the builtin list") {
  std::ifstream in(booksum_test::data_path("data/stopwords_en.txt"),
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == std::string(builtin_english_stopword_text()));
}

TEST_CASE("stopword file parsing skips comments and blank lines") {
  Stopwords sw = Stopwords::load(
      booksum_test::data_path("data/stopwords_en.txt"));
  CHECK(sw.contains("the"));
  CHECK(sw.contains("and"));
  CHECK_FALSE(sw.contains("#"));
  CHECK_FALSE(sw.contains(""));
  CHECK(sw.size() == Stopwords::builtin_english().size());
}
