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

#include "booksum/chapters.hpp"

#include <regex>

#include "booksum/error.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

std::string_view first_line(std::string_view text) {
  std::size_t eol = text.find('\n');
  return eol == std::string_view::npos ? text : text.substr(0, eol);
}

bool is_allcaps_heading(std::string_view text, std::size_t max_chars) {
  if (max_chars == 0) return false;
  std::string_view line = trim(first_line(text));
  if (line.empty() || line.size() > max_chars) return false;
  bool has_upper = false;
  for (char c : line) {
    if (c >= 'a' && c <= 'z') return false;
    if (is_ascii_upper(c)) has_upper = true;
  }
  return has_upper;
}

class HeadingMatcher {
 public:
  explicit HeadingMatcher(const HeadingRules& rules) : rules_(rules) {
    if (rules.patterns.empty()) {
      throw Error(ErrorCode::kConfigError, "heading pattern list is empty");
    }
    for (const std::string& p : rules.patterns) {
      try {
        regexes_.emplace_back(p, std::regex::ECMAScript | std::regex::icase);
      } catch (const std::regex_error& e) {
        throw Error(ErrorCode::kConfigError,
                    "invalid heading pattern '" + p + "': " + e.what());
      }
    }
  }

  bool matches(const Sentence& s) const {
    for (const std::regex& re : regexes_) {
      if (std::regex_search(s.text, re,
                            std::regex_constants::match_continuous)) {
        return true;
      }
    }
    return is_allcaps_heading(s.text, rules_.allcaps_max_chars);
  }

 private:
  const HeadingRules& rules_;
  std::vector<std::regex> regexes_;
};

std::string title_from(const Sentence& s) {
  return std::string(trim(first_line(s.text)));
}

}  // namespace

std::vector<Chapter> split_chapters(const CleanDocument& doc,
                                    const HeadingRules& rules) {
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "document has no sentences: " + doc.source_id);
  }
  HeadingMatcher matcher(rules);

  // Raw partition at heading sentences.
  std::vector<Chapter> raw;
  for (const Sentence& s : doc.sentences) {
    if (matcher.matches(s) && s.index > 0) {
      Chapter c;
      c.title = title_from(s);
      raw.push_back(std::move(c));
    } else if (raw.empty()) {
      Chapter c;
      if (s.index == 0 && matcher.matches(s)) {
        c.title = title_from(s);
      } else {
        c.title = "Front matter";
      }
      raw.push_back(std::move(c));
    }
    raw.back().sentences.push_back(s);
  }

  if (raw.size() == 1) {
    raw[0].index = 0;
    if (raw[0].title == "Front matter") raw[0].title = "Chapter 1";
    return raw;
  }

  // Merge undersized chapters into their predecessor; undersized leading
  // chapters (no predecessor yet) are folded into the one that follows.
  std::vector<Chapter> merged;
  std::vector<Sentence> pending;
  std::string pending_title;
  for (Chapter& c : raw) {
    if (c.sentences.size() < rules.min_chapter_sentences) {
      if (!merged.empty()) {
        auto& dst = merged.back().sentences;
        dst.insert(dst.end(), std::make_move_iterator(c.sentences.begin()),
                   std::make_move_iterator(c.sentences.end()));
      } else {
        if (pending.empty()) pending_title = c.title;
        pending.insert(pending.end(),
                       std::make_move_iterator(c.sentences.begin()),
                       std::make_move_iterator(c.sentences.end()));
      }
    } else {
      if (!pending.empty()) {
        c.sentences.insert(c.sentences.begin(),
                           std::make_move_iterator(pending.begin()),
                           std::make_move_iterator(pending.end()));
        pending.clear();
      }
      merged.push_back(std::move(c));
    }
  }
  if (!pending.empty()) {
    // Every raw chapter was undersized; keep them as one chapter.
    Chapter c;
    c.title = std::move(pending_title);
    c.sentences = std::move(pending);
    merged.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < merged.size(); ++i) merged[i].index = i;
  return merged;
}

}  // namespace booksum
