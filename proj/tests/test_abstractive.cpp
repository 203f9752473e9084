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

#include <doctest.h>

#include <chrono>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "booksum/error.hpp"
#include "booksum/text.hpp"
#include "support/test_support.hpp"

using namespace booksum;

namespace {

ChapterSummary chapter_summary(std::size_t index,
                               const std::vector<std::string>& texts) {
  ChapterSummary summary;
  summary.chapter_index = index;
  summary.title = "c" + std::to_string(index);
  summary.chapter_sentence_count = texts.size();
  for (std::size_t i = 0; i < texts.size(); ++i) {
    summary.sentences.push_back({i, i, texts[i], 1.0, i + 1});
  }
  return summary;
}

class MockSummarizeServer {
 public:
  explicit MockSummarizeServer(
      std::function<void(const httplib::Request&, httplib::Response&)>
          handler) {
    server_.Post("/summarize", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockSummarizeServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST_CASE("compile joins chapters as paragraphs") {
  CHECK(compile_chapter_summaries({chapter_summary(0, {"A."})}) == "A.");
  CHECK(compile_chapter_summaries(
            {chapter_summary(0, {"A.", "B."}), chapter_summary(1, {"C."})}) ==
        "A. B.\n\nC.");
  // empty chapter summaries are skipped, not rendered as blank paragraphs
  CHECK(compile_chapter_summaries(
            {chapter_summary(0, {"A."}), chapter_summary(1, {}),
             chapter_summary(2, {"B."})}) == "A.\n\nB.");
}

TEST_CASE("compile of nine chapters keeps nine paragraphs in order") {
  std::vector<ChapterSummary> summaries;
  for (std::size_t i = 0; i < 9; ++i) {
    summaries.push_back(
        chapter_summary(i, {"Chapter text " + std::to_string(i) + "."}));
  }
  std::string compiled = compile_chapter_summaries(summaries);
  std::size_t paragraphs = 1;
  for (std::size_t at = compiled.find("\n\n"); at != std::string::npos;
       at = compiled.find("\n\n", at + 2)) {
    ++paragraphs;
  }
  CHECK(paragraphs == 9);
  CHECK(compiled.find("Chapter text 0.") <
        compiled.find("Chapter text 8."));
}

TEST_CASE("compile rejects an all-empty input") {
  try {
    compile_chapter_summaries({chapter_summary(0, {})});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAllEmpty);
  }
}

TEST_CASE("bad length bounds are rejected") {
  AbstractiveRequest request;
  request.text = "Some text.";
  request.min_len = 50;
  request.max_len = 20;
  try {
    summarize_abstractive(request, AbstractiveConfig{});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadLengths);
  }
}

TEST_CASE("offline fallback compresses extractively within budget") {
  booksum_test::Rng rng(101);
  std::vector<std::string> source;
  std::string text;
  for (int i = 0; i < 10; ++i) {
    std::string s = booksum_test::random_sentence(rng, 5, 9);
    source.push_back(s);
    if (!text.empty()) text += ' ';
    text += s;
  }
  AbstractiveRequest request;
  request.text = text;
  request.min_len = 10;
  request.max_len = 50;
  AbstractiveConfig cfg;
  cfg.offline = true;
  AbstractResult result = summarize_abstractive(request, cfg);
  CHECK(result.mode == AbstractResult::Mode::kFallback);
  CHECK(result.model_id == "fallback-compressive");
  REQUIRE_FALSE(result.summary.empty());

  // ceil(50/25) = 2 sentences at most, each a verbatim source sentence, in
  // source order
  std::vector<Sentence> picked = segment_sentences(result.summary);
  CHECK(picked.size() <= 2);
  std::size_t last_pos = 0;
  for (const Sentence& s : picked) {
    std::size_t pos = std::find(source.begin(), source.end(), s.text) -
                      source.begin();
    REQUIRE(pos < source.size());
    CHECK(pos >= last_pos);
    last_pos = pos;
  }
  CHECK(pre_tokenize(result.summary).size() <= request.max_len);
}

TEST_CASE("fallback trims to the token bound by dropping weak sentences") {
  // each sentence is ~12 tokens; two sentences exceed max_len 15
  AbstractiveRequest request;
  request.text =
      "The first long sentence keeps going with many extra words inside. "
      "The second long sentence also keeps going with many more words.";
  request.min_len = 1;
  request.max_len = 15;
  AbstractiveConfig cfg;
  cfg.offline = true;
  AbstractResult result = summarize_abstractive(request, cfg);
  CHECK(result.mode == AbstractResult::Mode::kFallback);
  std::vector<Sentence> picked = segment_sentences(result.summary);
  CHECK(picked.size() == 1);
  CHECK(pre_tokenize(result.summary).size() <= 15);
}

TEST_CASE("remote summaries pass through byte-identically") {
  const std::string payload = "Summary with  exact   spacing and \xC3\xA9.";
  MockSummarizeServer server(
      [&](const httplib::Request& req, httplib::Response& res) {
        auto body = nlohmann::json::parse(req.body);
        CHECK(body["min_length"] == 5);
        CHECK(body["max_length"] == 99);
        CHECK_FALSE(body["text"].get<std::string>().empty());
        nlohmann::json out;
        out["summary"] = payload;
        out["model_id"] = "mock-model";
        res.set_content(out.dump(), "application/json");
      });
  AbstractiveRequest request;
  request.text = "Input text for the mock.";
  request.min_len = 5;
  request.max_len = 99;
  AbstractiveConfig cfg;
  cfg.endpoint_url = server.url();
  cfg.fallback_on_error = false;
  AbstractResult result = summarize_abstractive(request, cfg);
  CHECK(result.mode == AbstractResult::Mode::kRemote);
  CHECK(result.summary == payload);
  CHECK(result.model_id == "mock-model");
}

TEST_CASE("remote failure handling honors the fallback switch") {
  AbstractiveRequest request;
  request.text = "Fallback source sentence one. Fallback source two.";
  request.min_len = 1;
  request.max_len = 25;

  SUBCASE("http error, fallback disabled") {
    MockSummarizeServer server(
        [](const httplib::Request&, httplib::Response& res) {
          res.status = 503;
        });
    AbstractiveConfig cfg;
    cfg.endpoint_url = server.url();
    cfg.fallback_on_error = false;
    try {
      summarize_abstractive(request, cfg);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kRemoteUnavailable);
    }
  }

  SUBCASE("timeout, fallback disabled") {
    MockSummarizeServer server(
        [](const httplib::Request&, httplib::Response& res) {
          std::this_thread::sleep_for(std::chrono::milliseconds(1200));
          res.set_content(R"({"summary": "late"})", "application/json");
        });
    AbstractiveConfig cfg;
    cfg.endpoint_url = server.url();
    cfg.timeout_ms = 150;
    cfg.fallback_on_error = false;
    try {
      summarize_abstractive(request, cfg);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kRemoteUnavailable);
    }
  }

  SUBCASE("http error, fallback enabled") {
    MockSummarizeServer server(
        [](const httplib::Request&, httplib::Response& res) {
          res.status = 503;
        });
    AbstractiveConfig cfg;
    cfg.endpoint_url = server.url();
    cfg.fallback_on_error = true;
    AbstractResult result = summarize_abstractive(request, cfg);
    CHECK(result.mode == AbstractResult::Mode::kFallback);
    CHECK(result.model_id == "fallback-compressive");
  }
}

TEST_CASE("empty request text is rejected") {
  AbstractiveRequest request;
  request.text = "   ";
  AbstractiveConfig cfg;
  cfg.offline = true;
  try {
    summarize_abstractive(request, cfg);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyInput);
  }
}
