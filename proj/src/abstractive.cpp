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

#include "booksum/abstractive.hpp"

#include <cmath>
#include <mutex>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "booksum/error.hpp"
#include "booksum/http_url.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

constexpr std::size_t kFallbackTokensPerSentence = 25;
constexpr const char* kFallbackModelId = "fallback-compressive";

// Crude concurrency cap shared by all clients in the process.
class InFlightGuard {
 public:
  explicit InFlightGuard(int limit) {
    std::unique_lock<std::mutex> lock(mu());
    cv().wait(lock, [&] { return in_flight() < limit; });
    ++in_flight();
  }
  ~InFlightGuard() {
    {
      std::lock_guard<std::mutex> lock(mu());
      --in_flight();
    }
    cv().notify_one();
  }

 private:
  static std::mutex& mu() {
    static std::mutex m;
    return m;
  }
  static std::condition_variable& cv() {
    static std::condition_variable c;
    return c;
  }
  static int& in_flight() {
    static int n = 0;
    return n;
  }
};

AbstractResult remote_summarize(const AbstractiveRequest& request,
                                const AbstractiveConfig& cfg) {
  if (cfg.endpoint_url.empty()) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "no abstractive endpoint configured");
  }
  InFlightGuard guard(cfg.max_in_flight > 0 ? cfg.max_in_flight : 1);
  HttpUrl url = HttpUrl::parse(cfg.endpoint_url);
  httplib::Client client(url.origin);
  client.set_connection_timeout(0, cfg.timeout_ms * 1000LL);
  client.set_read_timeout(0, cfg.timeout_ms * 1000LL);

  nlohmann::json body;
  body["text"] = request.text;
  body["min_length"] = request.min_len;
  body["max_length"] = request.max_len;
  httplib::Result res = client.Post(url.path_prefix + "/summarize",
                                    body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "summarize service unreachable: " +
                    httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "summarize service returned HTTP " +
                    std::to_string(res->status));
  }
  nlohmann::json parsed = nlohmann::json::parse(res->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.contains("summary")) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "summarize service returned malformed JSON");
  }
  AbstractResult result;
  result.summary = parsed["summary"].get<std::string>();
  result.mode = AbstractResult::Mode::kRemote;
  result.model_id = parsed.value("model_id", std::string("unknown"));
  if (result.summary.empty()) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "summarize service returned an empty summary");
  }
  return result;
}

AbstractResult fallback_summarize(const AbstractiveRequest& request) {
  std::vector<Sentence> sentences = segment_sentences(request.text);
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "abstractive fallback found no sentences");
  }
  Chapter chapter;
  chapter.title = "fallback";
  chapter.sentences = std::move(sentences);

  EmbedderConfig embedder;  // deterministic local provider
  embedder.provider = EmbedProvider::kReference;
  embedder.dim = 256;
  std::vector<EmbeddingVector> embeddings =
      embed_sentences(chapter.sentences, embedder);
  std::vector<ScoredSentence> scored = score_centroid(embeddings);

  SummaryBudget budget;
  budget.mode = SummaryBudget::Mode::kCount;
  budget.count = static_cast<std::size_t>(
      std::ceil(static_cast<double>(request.max_len) /
                static_cast<double>(kFallbackTokensPerSentence)));
  std::vector<std::size_t> picked =
      select_positions(scored, chapter, budget, &embeddings, 0.7);

  // Trim least-valuable sentences while the token budget is exceeded.
  auto token_count = [&](const std::vector<std::size_t>& positions) {
    std::vector<std::string> texts;
    texts.reserve(positions.size());
    for (std::size_t p : positions) texts.push_back(chapter.sentences[p].text);
    return pre_tokenize(join(texts, " ")).size();
  };
  while (picked.size() > 1 && token_count(picked) > request.max_len) {
    auto worst = std::max_element(
        picked.begin(), picked.end(), [&](std::size_t a, std::size_t b) {
          return scored[a].rank < scored[b].rank;
        });
    picked.erase(worst);
  }

  std::vector<std::string> texts;
  texts.reserve(picked.size());
  for (std::size_t p : picked) texts.push_back(chapter.sentences[p].text);
  AbstractResult result;
  result.summary = join(texts, " ");
  result.mode = AbstractResult::Mode::kFallback;
  result.model_id = kFallbackModelId;
  return result;
}

}  // namespace

std::string compile_chapter_summaries(
    const std::vector<ChapterSummary>& summaries) {
  std::vector<std::string> paragraphs;
  for (const ChapterSummary& chapter : summaries) {
    std::vector<std::string> texts;
    texts.reserve(chapter.sentences.size());
    for (const SummarySentence& s : chapter.sentences) texts.push_back(s.text);
    std::string paragraph = join(texts, " ");
    if (!paragraph.empty()) paragraphs.push_back(std::move(paragraph));
  }
  if (paragraphs.empty()) {
    throw Error(ErrorCode::kAllEmpty, "all chapter summaries are empty");
  }
  return join(paragraphs, "\n\n");
}

AbstractResult summarize_abstractive(const AbstractiveRequest& request,
                                     const AbstractiveConfig& cfg) {
  if (request.min_len > request.max_len) {
    throw Error(ErrorCode::kBadLengths,
                "min_len " + std::to_string(request.min_len) + " > max_len " +
                    std::to_string(request.max_len));
  }
  if (trim(request.text).empty()) {
    throw Error(ErrorCode::kEmptyInput, "abstractive request text is empty");
  }
  if (cfg.offline) return fallback_summarize(request);
  try {
    return remote_summarize(request, cfg);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kRemoteUnavailable && cfg.fallback_on_error) {
      return fallback_summarize(request);
    }
    throw;
  }
}

}  // namespace booksum
