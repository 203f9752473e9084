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

#ifndef BOOKSUM_CHAPTERS_H_
#define BOOKSUM_CHAPTERS_H_

#include <string>
#include <vector>

#include "booksum/ingest.hpp"

namespace booksum {

struct Chapter {
  std::size_t index = 0;
  std::string title;
  std::vector<Sentence> sentences;
};

// A sentence opens a new chapter when one of the regex patterns matches at
// the start of its text (case-insensitive), or when its first line is an
// all-caps line of at most allcaps_max_chars characters (0 disables the
// all-caps rule). Chapters shorter than min_chapter_sentences are merged
// into their predecessor.
struct HeadingRules {
  std::vector<std::string> patterns = {
      R"(^(chapter|part|book)\s+([0-9]+|[ivxlc]+)\b)",
      R"(^[0-9]{1,3}\.\s+\S)",
  };
  std::size_t allcaps_max_chars = 60;
  std::size_t min_chapter_sentences = 3;
};

// Partitions the document's sentences into chapters. Content before the
// first heading becomes a "Front matter" chapter; with no matching heading
// the whole document is returned as a single chapter.
std::vector<Chapter> split_chapters(const CleanDocument& doc,
                                    const HeadingRules& rules);

}  // namespace booksum

#endif  // BOOKSUM_CHAPTERS_H_
