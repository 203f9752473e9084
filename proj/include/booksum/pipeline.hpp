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

#ifndef BOOKSUM_PIPELINE_H_
#define BOOKSUM_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "booksum/abstractive.hpp"
#include "booksum/chapters.hpp"
#include "booksum/extractive.hpp"
#include "booksum/ingest.hpp"
#include "booksum/rouge.hpp"

namespace booksum {

enum class OutputFormat { kJson, kMarkdown };

struct AbstractiveLengths {
  std::size_t min_len = 64;
  std::size_t max_len = 256;
};

struct PipelineConfig {
  std::filesystem::path input_path;
  InputFormat input_format = InputFormat::kTxt;
  Strategy strategy = Strategy::kCentroid;
  SummaryBudget budget;
  ExtractiveConfig extractive;
  AbstractiveConfig abstractive;
  AbstractiveLengths lengths;
  HeadingRules heading_rules;
  std::optional<std::filesystem::path> stopword_path;  // default: builtin list
  bool stem = false;
  std::optional<std::filesystem::path> reference_summary_path;
  OutputFormat output_format = OutputFormat::kJson;
  std::size_t parallelism = 1;
  std::string kernels = "auto";  // scalar | avx2 | neon | auto
};

// Reads the JSON config file; unknown keys are rejected so typos surface as
// kConfigError instead of silently falling back to defaults.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

struct BookSummary {
  std::string source_id;
  std::string strategy;
  std::vector<ChapterSummary> chapters;
  AbstractResult abstract;
  std::optional<RougeReport> rouge;
  // Wall-clock per stage, for logs only; never part of the canonical report
  // so repeated runs stay byte-identical.
  std::vector<std::pair<std::string, double>> timings_ms;
};

// Runs ingest -> chapter split -> per-chapter extractive summaries ->
// compile -> abstractive -> optional ROUGE against a reference summary.
// Stage failures are rethrown with the stage name attached; no partial
// result is returned.
BookSummary run_book_pipeline(const PipelineConfig& cfg);

// Canonical serialization: JSON with sorted keys and fixed 6-decimal floats,
// or Markdown with the abstract first and the ROUGE table last. Identical
// summaries serialize to identical bytes.
std::string emit_report(const BookSummary& summary, OutputFormat format);

// JSON object for a ROUGE report ({"rouge1": {"p":..,"r":..,"f":..}, ...}),
// canonical formatting.
std::string rouge_report_json(const RougeReport& report);

}  // namespace booksum

#endif  // BOOKSUM_PIPELINE_H_
