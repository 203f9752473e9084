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

namespace booksum {

// Kept byte-identical with data/stopwords_en.txt; a unit test enforces the
// sync. Contraction fragments (s, t, re, ve, ...) are listed separately
// because pre-tokenization splits on the apostrophe.
std::string_view builtin_english_stopword_text() {
  static constexpr std::string_view kText =
      "# bundled English stopword list\n"
      "# one word per line; lines starting with '#' are comments\n"
      "i\n"
      "me\n"
      "my\n"
      "myself\n"
      "we\n"
      "our\n"
      "ours\n"
      "ourselves\n"
      "you\n"
      "your\n"
      "yours\n"
      "yourself\n"
      "yourselves\n"
      "he\n"
      "him\n"
      "his\n"
      "himself\n"
      "she\n"
      "her\n"
      "hers\n"
      "herself\n"
      "it\n"
      "its\n"
      "itself\n"
      "they\n"
      "them\n"
      "their\n"
      "theirs\n"
      "themselves\n"
      "what\n"
      "which\n"
      "who\n"
      "whom\n"
      "this\n"
      "that\n"
      "these\n"
      "those\n"
      "am\n"
      "is\n"
      "are\n"
      "was\n"
      "were\n"
      "be\n"
      "been\n"
      "being\n"
      "have\n"
      "has\n"
      "had\n"
      "having\n"
      "do\n"
      "does\n"
      "did\n"
      "doing\n"
      "a\n"
      "an\n"
      "the\n"
      "and\n"
      "but\n"
      "if\n"
      "or\n"
      "because\n"
      "as\n"
      "until\n"
      "while\n"
      "of\n"
      "at\n"
      "by\n"
      "for\n"
      "with\n"
      "about\n"
      "against\n"
      "between\n"
      "into\n"
      "through\n"
      "during\n"
      "before\n"
      "after\n"
      "above\n"
      "below\n"
      "to\n"
      "from\n"
      "up\n"
      "down\n"
      "in\n"
      "out\n"
      "on\n"
      "off\n"
      "over\n"
      "under\n"
      "again\n"
      "further\n"
      "then\n"
      "once\n"
      "here\n"
      "there\n"
      "when\n"
      "where\n"
      "why\n"
      "how\n"
      "all\n"
      "any\n"
      "both\n"
      "each\n"
      "few\n"
      "more\n"
      "most\n"
      "other\n"
      "some\n"
      "such\n"
      "no\n"
      "nor\n"
      "not\n"
      "only\n"
      "own\n"
      "same\n"
      "so\n"
      "than\n"
      "too\n"
      "very\n"
      "s\n"
      "t\n"
      "can\n"
      "will\n"
      "just\n"
      "don\n"
      "should\n"
      "now\n"
      "d\n"
      "ll\n"
      "m\n"
      "o\n"
      "re\n"
      "ve\n"
      "y\n"
      "ain\n"
      "aren\n"
      "couldn\n"
      "didn\n"
      "doesn\n"
      "hadn\n"
      "hasn\n"
      "haven\n"
      "isn\n"
      "ma\n"
      "mightn\n"
      "mustn\n"
      "needn\n"
      "shan\n"
      "shouldn\n"
      "wasn\n"
      "weren\n"
      "won\n"
      "wouldn\n";
  return kText;
}

}  // namespace booksum
