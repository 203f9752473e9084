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

#include <array>
#include <fstream>
#include <sstream>

#include "booksum/error.hpp"
#include "booksum/pdf.hpp"
#include "booksum/stem.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

// No sentence break after these, e.g. "Mr. Smith" stays one sentence.
constexpr std::array<std::string_view, 7> kAbbreviations = {
    "mr.", "mrs.", "dr.", "st.", "vs.", "e.g.", "i.e."};

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_guarded_token(std::string_view token, bool at_sentence_start) {
  std::string lower = to_lower(token);
  for (std::string_view abbr : kAbbreviations) {
    if (lower == abbr) return true;
  }
  // A bare 1-3 digit enumerator opening a sentence ("12. The Journey")
  // heads a numbered section or list item; splitting there would orphan
  // the number.
  if (at_sentence_start && lower.size() >= 2 && lower.size() <= 4 &&
      lower.back() == '.') {
    bool digits = true;
    for (std::size_t i = 0; i + 1 < lower.size(); ++i) {
      if (lower[i] < '0' || lower[i] > '9') digits = false;
    }
    if (digits) return true;
  }
  return false;
}

}  // namespace

Stopwords Stopwords::from_words(std::vector<std::string> words,
                                std::string id) {
  Stopwords sw;
  sw.id_ = std::move(id);
  for (std::string& w : words) sw.words_.insert(to_lower(w));
  return sw;
}

Stopwords Stopwords::none() { return from_words({}, "none"); }

namespace {

Stopwords parse_stopword_text(std::string_view content, std::string id) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
    line = trim(line);
    if (!line.empty() && line.front() != '#') {
      words.emplace_back(line);
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return Stopwords::from_words(std::move(words), std::move(id));
}

}  // namespace

Stopwords Stopwords::builtin_english() {
  return parse_stopword_text(builtin_english_stopword_text(), "builtin:en");
}

Stopwords Stopwords::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfigError,
                "cannot open stopword file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  require_valid_utf8(content, "stopword file " + path.string());
  return parse_stopword_text(content, path.string());
}

std::string extract_text(const RawDocument& doc,
                         const TextExtractionBackend* pdf_backend) {
  if (doc.payload.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "empty input payload: " + doc.source_id);
  }
  std::string_view bytes(reinterpret_cast<const char*>(doc.payload.data()),
                         doc.payload.size());
  if (doc.format == InputFormat::kTxt) {
    require_valid_utf8(bytes, doc.source_id);
    return std::string(bytes);
  }
  if (pdf_backend == nullptr) {
    throw Error(ErrorCode::kExtractionFailed,
                "pdf input requires a text-extraction backend");
  }
  return pdf_backend->extract(doc.payload);
}

std::vector<Sentence> segment_sentences(std::string_view text) {
  std::vector<Sentence> out;
  const std::size_t n = text.size();
  std::size_t cursor = 0;

  while (cursor < n) {
    while (cursor < n && is_ascii_space(text[cursor])) ++cursor;
    if (cursor >= n) break;
    const std::size_t start = cursor;

    std::size_t end = 0;
    bool found = false;
    std::size_t j = start;
    while (j < n) {
      if (!is_terminal(text[j])) {
        ++j;
        continue;
      }
      std::size_t k = j + 1;
      while (k < n && is_terminal(text[k])) ++k;

      bool guarded = false;
      if (text[j] == '.' && k == j + 1) {
        std::size_t tok_start = j;
        while (tok_start > start && !is_ascii_space(text[tok_start - 1])) {
          --tok_start;
        }
        guarded = is_guarded_token(text.substr(tok_start, k - tok_start),
                                   tok_start == start);
      }
      if (!guarded) {
        if (k >= n) {
          end = k;
          found = true;
          break;
        }
        std::size_t m = k;
        while (m < n && is_ascii_space(text[m])) ++m;
        // Digits open sentences too, so numbered headings split off the
        // sentence that precedes them.
        if (m > k && (m >= n || is_ascii_upper(text[m]) ||
                      (text[m] >= '0' && text[m] <= '9'))) {
          end = k;
          found = true;
          break;
        }
      }
      j = k;
    }
    if (!found) {
      std::size_t last = n;
      while (last > start && is_ascii_space(text[last - 1])) --last;
      end = last;
    }
    if (end > start) {
      Sentence s;
      s.index = out.size();
      s.span_begin = start;
      s.span_end = end;
      s.text = std::string(text.substr(start, end - start));
      out.push_back(std::move(s));
    }
    cursor = end > cursor ? end : cursor + 1;
  }
  return out;
}

std::vector<std::string> clean_sentence(std::string_view text,
                                        const Stopwords& stopwords,
                                        const CleanOptions& options) {
  std::vector<std::string> out;
  for (std::string& token : pre_tokenize(to_lower(text))) {
    if (is_pure_punct(token)) continue;
    if (stopwords.contains(token)) continue;
    out.push_back(options.stem ? porter_stem(token) : std::move(token));
  }
  return out;
}

CleanDocument build_document(std::string source_id, std::string full_text,
                             const Stopwords& stopwords,
                             const CleanOptions& options) {
  CleanDocument doc;
  doc.source_id = std::move(source_id);
  doc.full_text = std::move(full_text);
  doc.stopword_list_id = stopwords.id();
  doc.sentences = segment_sentences(doc.full_text);
  for (Sentence& s : doc.sentences) {
    s.clean_tokens = clean_sentence(s.text, stopwords, options);
  }
  return doc;
}

}  // namespace booksum
