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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "booksum/error.hpp"
#include "booksum/pdf.hpp"
#include "booksum/pipeline.hpp"
#include "booksum/text.hpp"

namespace {

using namespace booksum;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kEmptyDocument,
                "cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  require_valid_utf8(text, path.string());
  return text;
}

void write_output(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kConfigError,
                "cannot open output file: " + out_path);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

int run_summarize(const PipelineConfig& cfg, const std::string& out_path) {
  BookSummary summary = run_book_pipeline(cfg);
  for (const auto& [stage, ms] : summary.timings_ms) {
    std::fprintf(stderr, "booksum: %-11s %8.1f ms\n", stage.c_str(), ms);
  }
  write_output(emit_report(summary, cfg.output_format), out_path);
  return 0;
}

int run_rouge(const std::string& candidate_path,
              const std::string& reference_path, const std::string& format) {
  std::string candidate = read_text_file(candidate_path);
  std::string reference = read_text_file(reference_path);
  RougeReport report = evaluate_summary(candidate, reference);
  if (format == "table") {
    std::fputs(rouge_report_table(report).c_str(), stdout);
  } else {
    std::fputs(rouge_report_json(report).c_str(), stdout);
  }
  return 0;
}

int run_chapters(const PipelineConfig& cfg) {
  RawDocument raw;
  raw.source_id = cfg.input_path.filename().string();
  raw.format = cfg.input_format;
  std::string text = read_text_file(cfg.input_path);
  if (cfg.input_format == InputFormat::kPdf) {
    std::ifstream in(cfg.input_path, std::ios::binary);
    raw.payload.assign(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
    BuiltinPdfBackend backend;
    text = backend.extract(raw.payload);
  }
  Stopwords stopwords = cfg.stopword_path ? Stopwords::load(*cfg.stopword_path)
                                          : Stopwords::builtin_english();
  CleanDocument doc = build_document(raw.source_id, std::move(text), stopwords);
  std::vector<Chapter> chapters = split_chapters(doc, cfg.heading_rules);
  for (const Chapter& c : chapters) {
    std::printf("chapter %zu: %-40s %5zu sentences (doc %zu..%zu)\n", c.index,
                c.title.c_str(), c.sentences.size(),
                c.sentences.front().index, c.sentences.back().index);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical book summarizer: per-chapter extractive "
               "selection compiled into one abstractive summary, with ROUGE "
               "evaluation."};
  app.require_subcommand(1);

  // --- summarize -----------------------------------------------------------
  auto* summarize = app.add_subcommand("summarize", "Summarize a book");
  std::string input, config_path, format = "txt", strategy = "centroid";
  std::string endpoint, reference, out_path, output_format = "json";
  std::string stopword_path, kernels = "auto", cache_dir, embed_endpoint;
  std::string embed_provider;
  double ratio = -1.0;
  std::size_t count = 0;
  bool offline = false, stem = false;
  std::size_t parallelism = 0;
  summarize->add_option("--input", input, "Input document path");
  summarize->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"txt", "pdf"}));
  summarize->add_option("--strategy", strategy, "Extractive strategy")
      ->check(CLI::IsMember({"centroid", "luhn", "textrank", "lexrank",
                             "lsa"}));
  summarize->add_option("--ratio", ratio,
                        "Per-chapter summary size as a fraction (0,1]");
  summarize->add_option("--count", count,
                        "Per-chapter summary size in sentences");
  summarize->add_flag("--offline", offline,
                      "Never call remote services; use local fallbacks");
  summarize->add_option("--endpoint", endpoint,
                        "Abstractive service endpoint (http://host:port)");
  summarize->add_option("--embed-endpoint", embed_endpoint,
                        "Embedding service endpoint (remote provider)");
  summarize->add_option("--embed-provider", embed_provider,
                        "Embedding provider")
      ->check(CLI::IsMember({"reference", "remote"}));
  summarize->add_option("--cache-dir", cache_dir, "Embedding cache directory");
  summarize->add_option("--reference", reference,
                        "Reference summary for ROUGE evaluation");
  summarize->add_option("--out", out_path, "Output path (default stdout)");
  summarize->add_option("--output-format", output_format, "Report format")
      ->check(CLI::IsMember({"json", "markdown"}));
  summarize->add_option("--config", config_path, "JSON config file");
  summarize->add_option("--stopwords", stopword_path, "Stopword list file");
  summarize->add_flag("--stem", stem, "Porter-stem feature tokens");
  summarize->add_option("--parallelism", parallelism,
                        "Concurrent chapter workers");
  summarize->add_option("--kernels", kernels, "Vector kernel backend")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  // --- rouge ---------------------------------------------------------------
  auto* rouge_cmd = app.add_subcommand(
      "rouge", "Score a candidate summary against a reference");
  std::string candidate_path, reference_path, rouge_format = "json";
  rouge_cmd->add_option("--candidate", candidate_path, "Candidate summary")
      ->required();
  rouge_cmd->add_option("--reference", reference_path, "Reference summary")
      ->required();
  rouge_cmd->add_option("--output-format", rouge_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // --- chapters ------------------------------------------------------------
  auto* chapters_cmd =
      app.add_subcommand("chapters", "Show detected chapter boundaries");
  std::string chapters_input, chapters_format = "txt", chapters_stopwords;
  chapters_cmd->add_option("--input", chapters_input, "Input document path")
      ->required();
  chapters_cmd->add_option("--format", chapters_format, "Input format")
      ->check(CLI::IsMember({"txt", "pdf"}));
  chapters_cmd->add_option("--stopwords", chapters_stopwords,
                           "Stopword list file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (summarize->parsed()) {
      PipelineConfig cfg;
      if (!config_path.empty()) cfg = load_pipeline_config(config_path);
      if (!input.empty()) cfg.input_path = input;
      if (summarize->count("--format") > 0) {
        cfg.input_format =
            format == "pdf" ? InputFormat::kPdf : InputFormat::kTxt;
      }
      if (summarize->count("--strategy") > 0) {
        cfg.strategy = *strategy_from_name(strategy);
      }
      if (ratio > 0.0) {
        cfg.budget.mode = SummaryBudget::Mode::kRatio;
        cfg.budget.ratio = ratio;
      }
      if (count > 0) {
        if (ratio > 0.0) {
          throw Error(ErrorCode::kConfigError,
                      "--ratio and --count are mutually exclusive");
        }
        cfg.budget.mode = SummaryBudget::Mode::kCount;
        cfg.budget.count = count;
      }
      if (offline) {
        cfg.abstractive.offline = true;
        cfg.extractive.embedder.provider = EmbedProvider::kReference;
      }
      if (!endpoint.empty()) {
        cfg.abstractive.endpoint_url = endpoint;
        cfg.abstractive.offline = false;
      }
      if (!embed_provider.empty()) {
        cfg.extractive.embedder.provider = embed_provider == "remote"
                                               ? EmbedProvider::kRemote
                                               : EmbedProvider::kReference;
        if (embed_provider == "remote" &&
            cfg.extractive.embedder.dim == 256) {
          cfg.extractive.embedder.dim = 768;
        }
      }
      if (!embed_endpoint.empty()) {
        cfg.extractive.embedder.endpoint_url = embed_endpoint;
      }
      if (cfg.extractive.embedder.provider == EmbedProvider::kRemote &&
          cfg.extractive.embedder.endpoint_url.empty() && !endpoint.empty()) {
        cfg.extractive.embedder.endpoint_url = endpoint;
      }
      if (!cache_dir.empty()) cfg.extractive.embedder.cache_dir = cache_dir;
      if (!reference.empty()) cfg.reference_summary_path = reference;
      if (summarize->count("--output-format") > 0) {
        cfg.output_format = output_format == "markdown"
                                ? OutputFormat::kMarkdown
                                : OutputFormat::kJson;
      }
      if (!stopword_path.empty()) cfg.stopword_path = stopword_path;
      if (stem) cfg.stem = true;
      if (parallelism > 0) cfg.parallelism = parallelism;
      if (summarize->count("--kernels") > 0) cfg.kernels = kernels;
      if (cfg.input_path.empty()) {
        throw Error(ErrorCode::kConfigError,
                    "an input path is required (--input or config file)");
      }
      return run_summarize(cfg, out_path);
    }
    if (rouge_cmd->parsed()) {
      return run_rouge(candidate_path, reference_path, rouge_format);
    }
    if (chapters_cmd->parsed()) {
      PipelineConfig cfg;
      cfg.input_path = chapters_input;
      cfg.input_format =
          chapters_format == "pdf" ? InputFormat::kPdf : InputFormat::kTxt;
      if (!chapters_stopwords.empty()) cfg.stopword_path = chapters_stopwords;
      return run_chapters(cfg);
    }
  } catch (const Error& e) {
    std::string where =
        e.stage().empty() ? std::string() : "[" + e.stage() + "] ";
    std::fprintf(stderr, "booksum: %s%s: %s\n", where.c_str(),
                 error_code_name(e.code()), e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "booksum: %s\n", e.what());
    return 1;
  }
  return 0;
}
