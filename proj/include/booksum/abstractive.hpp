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

#ifndef BOOKSUM_ABSTRACTIVE_H_
#define BOOKSUM_ABSTRACTIVE_H_

#include <string>
#include <vector>

#include "booksum/extractive.hpp"

namespace booksum {

struct AbstractiveRequest {
  std::string text;
  std::size_t min_len = 64;   // tokens
  std::size_t max_len = 256;  // tokens
};

struct AbstractResult {
  enum class Mode { kRemote, kFallback };
  std::string summary;
  Mode mode = Mode::kFallback;
  std::string model_id;
};

struct AbstractiveConfig {
  std::string endpoint_url;
  int timeout_ms = 30000;
  bool offline = false;
  // When the service fails and this is set, degrade to the local extractive
  // fallback instead of raising kRemoteUnavailable.
  bool fallback_on_error = true;
  int max_in_flight = 2;
};

// Chapter summaries joined in chapter order, one paragraph per chapter,
// sentences joined by single spaces. Empty summaries are skipped; all empty
// raises Error(kAllEmpty).
std::string compile_chapter_summaries(
    const std::vector<ChapterSummary>& summaries);

// Remote mode POSTs {endpoint}/summarize and returns the service summary
// verbatim. Offline (or on remote failure with fallback enabled) the result
// is an honest extractive compression: centroid + MMR over the request
// text's sentences with a budget of ceil(max_len / 25) sentences, labeled
// mode=fallback / model_id "fallback-compressive".
AbstractResult summarize_abstractive(const AbstractiveRequest& request,
                                     const AbstractiveConfig& cfg);

}  // namespace booksum

#endif  // BOOKSUM_ABSTRACTIVE_H_
