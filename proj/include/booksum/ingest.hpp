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

#ifndef BOOKSUM_INGEST_H_
#define BOOKSUM_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace booksum {

enum class InputFormat { kPdf, kTxt };

struct RawDocument {
  std::string source_id;
  InputFormat format = InputFormat::kTxt;
  std::vector<std::uint8_t> payload;
};

// One source sentence. text is the verbatim slice full_text[span_begin,
// span_end); clean_tokens carry the lowercased, stopword- and
// punctuation-free feature tokens used for scoring. Summaries always quote
// text, never the cleaned form.
struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::vector<std::string> clean_tokens;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
};

struct CleanDocument {
  std::string source_id;
  std::string full_text;
  std::vector<Sentence> sentences;
  std::string stopword_list_id;
};

// Stopword set loaded from a UTF-8 file with one word per line; '#' starts a
// comment line. The bundled English list is compiled in as the default.
class Stopwords {
 public:
  static Stopwords builtin_english();
  static Stopwords load(const std::filesystem::path& path);
  static Stopwords from_words(std::vector<std::string> words, std::string id);
  static Stopwords none();

  bool contains(const std::string& lowercased) const {
    return words_.count(lowercased) > 0;
  }
  const std::string& id() const { return id_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
  std::string id_;
};

// Raw text of the bundled English stopword list, in the stopword file
// format. data/stopwords_en.txt ships the same content.
std::string_view builtin_english_stopword_text();

struct CleanOptions {
  bool stem = false;
};

class TextExtractionBackend;

// Decodes a raw document to UTF-8 text. txt payloads are validated and
// passed through; pdf payloads go through the backend, which normalizes
// page breaks to newlines.
std::string extract_text(const RawDocument& doc,
                         const TextExtractionBackend* pdf_backend);

// Splits text into sentences at {. ! ?} runs followed by whitespace and an
// uppercase letter (or end of text), guarding a fixed abbreviation list.
// Spans cover all non-whitespace text; gaps between spans are whitespace.
std::vector<Sentence> segment_sentences(std::string_view text);

// Lowercased tokens from pre_tokenize with stopwords and pure-punctuation
// tokens removed; optionally Porter-stemmed.
std::vector<std::string> clean_sentence(std::string_view text,
                                        const Stopwords& stopwords,
                                        const CleanOptions& options = {});

// segment_sentences + clean_sentence over a whole document.
CleanDocument build_document(std::string source_id, std::string full_text,
                             const Stopwords& stopwords,
                             const CleanOptions& options = {});

}  // namespace booksum

#endif  // BOOKSUM_INGEST_H_
