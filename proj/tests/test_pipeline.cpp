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

#include "booksum/pipeline.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "booksum/error.hpp"
#include "booksum/kernels.hpp"
#include "support/test_support.hpp"

using namespace booksum;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / ("booksum_" + name);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

PipelineConfig offline_config(const std::filesystem::path& input) {
  PipelineConfig cfg;
  cfg.input_path = input;
  cfg.abstractive.offline = true;
  cfg.extractive.embedder.dim = 64;
  cfg.kernels = "scalar";
  return cfg;
}

const char* kSmallBook =
    "CHAPTER 1. The harbor held the tide. Nets dried along the pier. "
    "Gulls circled the lantern tower. Fishermen mended the old rope. "
    "CHAPTER 2. The ledger listed small debts. Coins crossed the counter. "
    "The clerk signed every receipt. Interest grew in the vault.";

}  // namespace

TEST_CASE("empty input file fails in the ingest stage") {
  std::filesystem::path path = write_temp("empty.txt", "");
  PipelineConfig cfg = offline_config(path);
  try {
    run_book_pipeline(cfg);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyDocument);
    CHECK(e.stage() == "ingest");
  }
}

TEST_CASE("single-chapter document produces a complete offline summary") {
  std::filesystem::path path = write_temp(
      "single.txt",
      "The harbor held the tide. Nets dried along the pier. "
      "Gulls circled the lantern tower.");
  PipelineConfig cfg = offline_config(path);
  BookSummary summary = run_book_pipeline(cfg);
  CHECK(summary.chapters.size() == 1);
  CHECK(summary.abstract.mode == AbstractResult::Mode::kFallback);
  CHECK_FALSE(summary.abstract.summary.empty());
  CHECK_FALSE(summary.rouge.has_value());
  CHECK_FALSE(summary.timings_ms.empty());
}

TEST_CASE("repeated offline runs emit byte-identical reports") {
  std::filesystem::path path = write_temp("det.txt", kSmallBook);
  PipelineConfig cfg = offline_config(path);
  std::string a = emit_report(run_book_pipeline(cfg), OutputFormat::kJson);
  std::string b = emit_report(run_book_pipeline(cfg), OutputFormat::kJson);
  CHECK(a == b);
  std::string md1 =
      emit_report(run_book_pipeline(cfg), OutputFormat::kMarkdown);
  std::string md2 =
      emit_report(run_book_pipeline(cfg), OutputFormat::kMarkdown);
  CHECK(md1 == md2);
}

TEST_CASE("parallel and serial runs are identical") {
  std::filesystem::path path = write_temp("par.txt", kSmallBook);
  PipelineConfig serial = offline_config(path);
  serial.parallelism = 1;
  PipelineConfig parallel = offline_config(path);
  parallel.parallelism = 4;
  CHECK(emit_report(run_book_pipeline(serial), OutputFormat::kJson) ==
        emit_report(run_book_pipeline(parallel), OutputFormat::kJson));
}

TEST_CASE("every summary sentence appears verbatim in the source") {
  std::filesystem::path path = write_temp("subset.txt", kSmallBook);
  PipelineConfig cfg = offline_config(path);
  BookSummary summary = run_book_pipeline(cfg);
  std::string source = kSmallBook;
  for (const ChapterSummary& chapter : summary.chapters) {
    CHECK_FALSE(chapter.sentences.empty());
    for (const SummarySentence& s : chapter.sentences) {
      CHECK(source.find(s.text) != std::string::npos);
    }
  }
}

TEST_CASE("rouge stage runs when a reference is supplied") {
  std::filesystem::path input = write_temp("withref.txt", kSmallBook);
  std::filesystem::path reference = write_temp(
      "ref.txt", "The harbor held the tide and the ledger listed debts.");
  PipelineConfig cfg = offline_config(input);
  cfg.reference_summary_path = reference;
  BookSummary summary = run_book_pipeline(cfg);
  REQUIRE(summary.rouge.has_value());
  CHECK(summary.rouge->rouge1.f1 > 0.0);
  CHECK(summary.rouge->rouge1.f1 <= 1.0);

  std::string md = emit_report(summary, OutputFormat::kMarkdown);
  CHECK(md.find("## ROUGE") != std::string::npos);
  CHECK(md.find("| Precision |") != std::string::npos);
  CHECK(md.find("| F-Score |") != std::string::npos);
  // abstract leads, rouge trails
  CHECK(md.find("## Abstract") < md.find("## Chapter 1"));
  CHECK(md.rfind("## ROUGE") > md.find("## Chapter"));

  std::string json = emit_report(summary, OutputFormat::kJson);
  CHECK(json.find("\"rouge1\"") != std::string::npos);
}

TEST_CASE("json report is canonical: sorted keys, 6-decimal floats") {
  std::filesystem::path path = write_temp("canon.txt", kSmallBook);
  PipelineConfig cfg = offline_config(path);
  BookSummary summary = run_book_pipeline(cfg);
  std::string json = emit_report(summary, OutputFormat::kJson);
  CHECK(json.find("\"abstract\"") < json.find("\"chapters\""));
  CHECK(json.find("\"chapters\"") < json.find("\"source_id\""));
  // weights print with exactly six decimals
  std::size_t at = json.find("\"weight\": ");
  REQUIRE(at != std::string::npos);
  std::string number = json.substr(at + 11, 12);
  std::size_t dot = number.find('.');
  REQUIRE(dot != std::string::npos);
  CHECK(number.find_first_not_of("0123456789", dot + 1) == dot + 7);
  // identical summaries serialize identically
  CHECK(json == emit_report(summary, OutputFormat::kJson));
}

TEST_CASE("config file loads and rejects unknown keys") {
  std::filesystem::path good = write_temp("cfg_good.json", R"({
    "strategy": "lexrank",
    "budget": {"mode": "count", "count": 2},
    "embedder": {"provider": "reference", "dim": 32},
    "abstractive": {"offline": true, "min_len": 8, "max_len": 64},
    "heading": {"min_chapter_sentences": 2},
    "lexrank": {"threshold": 0.2},
    "parallelism": 2,
    "kernels": "scalar"
  })");
  PipelineConfig cfg = load_pipeline_config(good);
  CHECK(cfg.strategy == Strategy::kLexRank);
  CHECK(cfg.budget.mode == SummaryBudget::Mode::kCount);
  CHECK(cfg.budget.count == 2);
  CHECK(cfg.extractive.embedder.dim == 32);
  CHECK(cfg.abstractive.offline);
  CHECK(cfg.lengths.min_len == 8);
  CHECK(cfg.lengths.max_len == 64);
  CHECK(cfg.heading_rules.min_chapter_sentences == 2);
  CHECK(cfg.extractive.lexrank.threshold == 0.2);
  CHECK(cfg.parallelism == 2);

  std::filesystem::path bad =
      write_temp("cfg_bad.json", R"({"strateggy": "lsa"})");
  try {
    load_pipeline_config(bad);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfigError);
  }

  std::filesystem::path invalid =
      write_temp("cfg_invalid.json", "not json at all");
  CHECK_THROWS_AS(load_pipeline_config(invalid), Error);
}

TEST_CASE("config-selected strategy drives the pipeline") {
  std::filesystem::path input = write_temp("strategy.txt", kSmallBook);
  PipelineConfig cfg = offline_config(input);
  cfg.strategy = Strategy::kLuhn;
  BookSummary summary = run_book_pipeline(cfg);
  CHECK(summary.strategy == "luhn");
  std::string json = emit_report(summary, OutputFormat::kJson);
  CHECK(json.find("\"strategy\": \"luhn\"") != std::string::npos);
}

TEST_CASE("unknown kernels backend is a config error") {
  std::filesystem::path input = write_temp("kern.txt", kSmallBook);
  PipelineConfig cfg = offline_config(input);
  cfg.kernels = "sse9";
  CHECK_THROWS_AS(run_book_pipeline(cfg), Error);
  kernels::set_active("auto");
}

TEST_CASE("missing input file maps to an input error") {
  PipelineConfig cfg = offline_config("/definitely/not/here.txt");
  try {
    run_book_pipeline(cfg);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.exit_code() == 3);
    CHECK(e.stage() == "ingest");
  }
}
