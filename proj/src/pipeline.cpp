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

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "booksum/error.hpp"
#include "booksum/kernels.hpp"
#include "booksum/pdf.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

using nlohmann::json;

// --- config loading --------------------------------------------------------

void reject_unknown_keys(const json& object, std::string_view where,
                         std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    bool ok = false;
    for (std::string_view k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw Error(ErrorCode::kConfigError,
                  "unknown config key '" + key + "' in " + std::string(where));
    }
  }
}

template <typename T>
void read_to(const json& object, const char* key, T* out) {
  if (!object.contains(key)) return;
  try {
    *out = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigError,
                std::string("bad value for config key '") + key +
                    "': " + e.what());
  }
}

SummaryBudget parse_budget(const json& object) {
  reject_unknown_keys(object, "budget", {"mode", "ratio", "count"});
  SummaryBudget budget;
  std::string mode = "ratio";
  read_to(object, "mode", &mode);
  if (mode == "ratio") {
    budget.mode = SummaryBudget::Mode::kRatio;
    read_to(object, "ratio", &budget.ratio);
  } else if (mode == "count") {
    budget.mode = SummaryBudget::Mode::kCount;
    std::size_t count = 0;
    read_to(object, "count", &count);
    budget.count = count;
  } else {
    throw Error(ErrorCode::kConfigError,
                "budget mode must be 'ratio' or 'count'");
  }
  return budget;
}

EmbedderConfig parse_embedder(const json& object) {
  reject_unknown_keys(object, "embedder",
                      {"provider", "dim", "endpoint", "timeout_ms",
                       "cache_dir"});
  EmbedderConfig cfg;
  std::string provider = "reference";
  read_to(object, "provider", &provider);
  if (provider == "reference") {
    cfg.provider = EmbedProvider::kReference;
  } else if (provider == "remote") {
    cfg.provider = EmbedProvider::kRemote;
    cfg.dim = 768;
  } else {
    throw Error(ErrorCode::kConfigError,
                "embedder provider must be 'reference' or 'remote'");
  }
  read_to(object, "dim", &cfg.dim);
  read_to(object, "endpoint", &cfg.endpoint_url);
  read_to(object, "timeout_ms", &cfg.timeout_ms);
  if (object.contains("cache_dir")) {
    cfg.cache_dir = std::filesystem::path(
        object.at("cache_dir").get<std::string>());
  }
  if (cfg.provider == EmbedProvider::kRemote && cfg.endpoint_url.empty()) {
    throw Error(ErrorCode::kConfigError,
                "remote embedder requires an endpoint");
  }
  return cfg;
}

}  // namespace

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfigError,
                "cannot open config file: " + path.string());
  }
  json parsed = json::parse(in, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw Error(ErrorCode::kConfigError,
                "config file is not a JSON object: " + path.string());
  }
  reject_unknown_keys(
      parsed, "config",
      {"input", "format", "strategy", "budget", "embedder", "abstractive",
       "heading", "luhn", "textrank", "lexrank", "lsa", "mmr_lambda",
       "stopwords", "stem", "reference", "output_format", "parallelism",
       "kernels"});

  PipelineConfig cfg;
  if (parsed.contains("input")) {
    cfg.input_path = parsed.at("input").get<std::string>();
  }
  if (parsed.contains("format")) {
    std::string format = parsed.at("format").get<std::string>();
    if (format == "txt") {
      cfg.input_format = InputFormat::kTxt;
    } else if (format == "pdf") {
      cfg.input_format = InputFormat::kPdf;
    } else {
      throw Error(ErrorCode::kConfigError, "format must be 'txt' or 'pdf'");
    }
  }
  if (parsed.contains("strategy")) {
    std::string name = parsed.at("strategy").get<std::string>();
    auto strategy = strategy_from_name(name);
    if (!strategy) {
      throw Error(ErrorCode::kConfigError, "unknown strategy: " + name);
    }
    cfg.strategy = *strategy;
  }
  if (parsed.contains("budget")) cfg.budget = parse_budget(parsed["budget"]);
  if (parsed.contains("embedder")) {
    cfg.extractive.embedder = parse_embedder(parsed["embedder"]);
  }
  if (parsed.contains("abstractive")) {
    const json& a = parsed["abstractive"];
    reject_unknown_keys(a, "abstractive",
                        {"endpoint", "offline", "fallback_on_error",
                         "min_len", "max_len", "timeout_ms",
                         "max_in_flight"});
    read_to(a, "endpoint", &cfg.abstractive.endpoint_url);
    read_to(a, "offline", &cfg.abstractive.offline);
    read_to(a, "fallback_on_error", &cfg.abstractive.fallback_on_error);
    read_to(a, "timeout_ms", &cfg.abstractive.timeout_ms);
    read_to(a, "max_in_flight", &cfg.abstractive.max_in_flight);
    read_to(a, "min_len", &cfg.lengths.min_len);
    read_to(a, "max_len", &cfg.lengths.max_len);
  }
  if (parsed.contains("heading")) {
    const json& h = parsed["heading"];
    reject_unknown_keys(
        h, "heading",
        {"patterns", "allcaps_max_chars", "min_chapter_sentences"});
    read_to(h, "patterns", &cfg.heading_rules.patterns);
    read_to(h, "allcaps_max_chars", &cfg.heading_rules.allcaps_max_chars);
    read_to(h, "min_chapter_sentences",
            &cfg.heading_rules.min_chapter_sentences);
  }
  if (parsed.contains("luhn")) {
    const json& l = parsed["luhn"];
    reject_unknown_keys(l, "luhn", {"gap", "top_frac", "positional"});
    read_to(l, "gap", &cfg.extractive.luhn.gap);
    read_to(l, "top_frac", &cfg.extractive.luhn.top_frac);
    read_to(l, "positional", &cfg.extractive.luhn.positional);
  }
  if (parsed.contains("textrank")) {
    const json& t = parsed["textrank"];
    reject_unknown_keys(t, "textrank", {"damping", "tol", "max_iter"});
    read_to(t, "damping", &cfg.extractive.textrank.damping);
    read_to(t, "tol", &cfg.extractive.textrank.tol);
    read_to(t, "max_iter", &cfg.extractive.textrank.max_iter);
  }
  if (parsed.contains("lexrank")) {
    const json& l = parsed["lexrank"];
    reject_unknown_keys(l, "lexrank",
                        {"threshold", "damping", "tol", "max_iter"});
    read_to(l, "threshold", &cfg.extractive.lexrank.threshold);
    read_to(l, "damping", &cfg.extractive.lexrank.pagerank.damping);
    read_to(l, "tol", &cfg.extractive.lexrank.pagerank.tol);
    read_to(l, "max_iter", &cfg.extractive.lexrank.pagerank.max_iter);
  }
  if (parsed.contains("lsa")) {
    const json& l = parsed["lsa"];
    reject_unknown_keys(l, "lsa", {"k_topics"});
    read_to(l, "k_topics", &cfg.extractive.lsa.k_topics);
  }
  read_to(parsed, "mmr_lambda", &cfg.extractive.mmr_lambda);
  if (parsed.contains("stopwords") && !parsed["stopwords"].is_null()) {
    cfg.stopword_path =
        std::filesystem::path(parsed.at("stopwords").get<std::string>());
  }
  read_to(parsed, "stem", &cfg.stem);
  if (parsed.contains("reference")) {
    cfg.reference_summary_path =
        std::filesystem::path(parsed.at("reference").get<std::string>());
  }
  if (parsed.contains("output_format")) {
    std::string format = parsed.at("output_format").get<std::string>();
    if (format == "json") {
      cfg.output_format = OutputFormat::kJson;
    } else if (format == "markdown") {
      cfg.output_format = OutputFormat::kMarkdown;
    } else {
      throw Error(ErrorCode::kConfigError,
                  "output_format must be 'json' or 'markdown'");
    }
  }
  read_to(parsed, "parallelism", &cfg.parallelism);
  if (cfg.parallelism < 1) {
    throw Error(ErrorCode::kConfigError, "parallelism must be >= 1");
  }
  read_to(parsed, "kernels", &cfg.kernels);
  return cfg;
}

namespace {

// --- pipeline stages -------------------------------------------------------

template <typename Fn>
auto run_stage(const char* stage, std::vector<std::pair<std::string, double>>*
                                      timings,
               Fn&& fn) -> decltype(fn()) {
  auto started = std::chrono::steady_clock::now();
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      auto elapsed = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      timings->emplace_back(stage, elapsed);
      return;
    } else {
      auto result = fn();
      auto elapsed = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      timings->emplace_back(stage, elapsed);
      return result;
    }
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kEmptyDocument,
                "cannot open input file: " + path.string());
  }
  std::vector<std::uint8_t> bytes(
      (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

std::string read_file_text(const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes = read_file_bytes(path);
  std::string text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  require_valid_utf8(text, path.string());
  return text;
}

std::vector<ChapterSummary> summarize_chapters(
    const std::vector<Chapter>& chapters, const PipelineConfig& cfg) {
  std::vector<ChapterSummary> summaries(chapters.size());
  std::size_t workers = std::min(cfg.parallelism, chapters.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < chapters.size(); ++i) {
      summaries[i] = summarize_chapter(chapters[i], cfg.strategy, cfg.budget,
                                       cfg.extractive);
    }
    return summaries;
  }

  // Chapters are independent; workers pull indices off a shared counter and
  // write into their own slot, so output equals the serial run.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(chapters.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= chapters.size()) break;
        try {
          summaries[i] = summarize_chapter(chapters[i], cfg.strategy,
                                           cfg.budget, cfg.extractive);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return summaries;
}

// --- canonical JSON --------------------------------------------------------

std::string format_float6(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

void dump_canonical(const json& value, std::string* out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        *out += "{}";
        return;
      }
      *out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) *out += ",\n";
        first = false;
        *out += pad_in;
        *out += json(key).dump();
        *out += ": ";
        dump_canonical(item, out, indent + 1);
      }
      *out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        *out += "[]";
        return;
      }
      *out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) *out += ",\n";
        *out += pad_in;
        dump_canonical(value[i], out, indent + 1);
      }
      *out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      *out += format_float6(value.get<double>());
      return;
    default:
      *out += value.dump();
      return;
  }
}

std::string dump_canonical(const json& value) {
  std::string out;
  dump_canonical(value, &out, 0);
  out += "\n";
  return out;
}

json rouge_score_to_json(const RougeScore& score) {
  json out;
  out["p"] = score.precision;
  out["r"] = score.recall;
  out["f"] = score.f1;
  return out;
}

json rouge_report_to_json(const RougeReport& report) {
  json out;
  out["rouge1"] = rouge_score_to_json(report.rouge1);
  out["rouge2"] = rouge_score_to_json(report.rouge2);
  out["rougeL"] = rouge_score_to_json(report.rougeL);
  return out;
}

std::string markdown_report(const BookSummary& summary) {
  std::string out;
  out += "# Book summary: " + summary.source_id + "\n\n";
  out += "## Abstract\n\n";
  out += "_mode: ";
  out += summary.abstract.mode == AbstractResult::Mode::kRemote ? "remote"
                                                                : "fallback";
  out += ", model: " + summary.abstract.model_id + "_\n\n";
  out += summary.abstract.summary + "\n";
  for (const ChapterSummary& chapter : summary.chapters) {
    out += "\n## Chapter " + std::to_string(chapter.chapter_index + 1) + ": " +
           chapter.title + "\n\n";
    out += "_" + std::to_string(chapter.sentences.size()) + " of " +
           std::to_string(chapter.chapter_sentence_count) +
           " sentences selected (" + summary.strategy + ")_\n\n";
    for (const SummarySentence& s : chapter.sentences) {
      out += "- [rank " + std::to_string(s.rank) + ", weight " +
             format_float6(s.weight) + "] " + s.text + "\n";
    }
  }
  if (summary.rouge) {
    const RougeReport& r = *summary.rouge;
    out += "\n## ROUGE\n\n";
    out += "|           | ROUGE-1 | ROUGE-2 | ROUGE-L |\n";
    out += "|-----------|---------|---------|---------|\n";
    auto row = [&](const char* label, double r1, double r2, double rl) {
      out += "| " + std::string(label) + " | " + format_float6(r1) + " | " +
             format_float6(r2) + " | " + format_float6(rl) + " |\n";
    };
    row("Precision", r.rouge1.precision, r.rouge2.precision,
        r.rougeL.precision);
    row("Recall", r.rouge1.recall, r.rouge2.recall, r.rougeL.recall);
    row("F-Score", r.rouge1.f1, r.rouge2.f1, r.rougeL.f1);
  }
  return out;
}

}  // namespace

BookSummary run_book_pipeline(const PipelineConfig& cfg) {
  if (!cfg.kernels.empty() && !kernels::set_active(cfg.kernels)) {
    throw Error(ErrorCode::kConfigError,
                "unknown kernels backend: " + cfg.kernels);
  }
  BookSummary summary;
  summary.strategy = std::string(strategy_name(cfg.strategy));
  auto* timings = &summary.timings_ms;

  CleanDocument document = run_stage("ingest", timings, [&] {
    RawDocument raw;
    raw.source_id = cfg.input_path.filename().string();
    raw.format = cfg.input_format;
    raw.payload = read_file_bytes(cfg.input_path);
    BuiltinPdfBackend pdf_backend;
    std::string text = extract_text(raw, &pdf_backend);
    Stopwords stopwords = cfg.stopword_path
                              ? Stopwords::load(*cfg.stopword_path)
                              : Stopwords::builtin_english();
    CleanOptions options;
    options.stem = cfg.stem;
    CleanDocument doc = build_document(raw.source_id, std::move(text),
                                       stopwords, options);
    if (doc.sentences.empty()) {
      throw Error(ErrorCode::kEmptyDocument,
                  "no sentences in input: " + raw.source_id);
    }
    return doc;
  });
  summary.source_id = document.source_id;

  std::vector<Chapter> chapters = run_stage("chapters", timings, [&] {
    return split_chapters(document, cfg.heading_rules);
  });

  summary.chapters = run_stage("extractive", timings, [&] {
    return summarize_chapters(chapters, cfg);
  });

  std::string compiled = run_stage("compile", timings, [&] {
    return compile_chapter_summaries(summary.chapters);
  });

  summary.abstract = run_stage("abstractive", timings, [&] {
    AbstractiveRequest request;
    request.text = compiled;
    request.min_len = cfg.lengths.min_len;
    request.max_len = cfg.lengths.max_len;
    return summarize_abstractive(request, cfg.abstractive);
  });

  if (cfg.reference_summary_path) {
    summary.rouge = run_stage("rouge", timings, [&] {
      std::string reference = read_file_text(*cfg.reference_summary_path);
      return evaluate_summary(summary.abstract.summary, reference);
    });
  }
  return summary;
}

std::string rouge_report_json(const RougeReport& report) {
  return dump_canonical(rouge_report_to_json(report));
}

std::string emit_report(const BookSummary& summary, OutputFormat format) {
  if (format == OutputFormat::kMarkdown) return markdown_report(summary);

  json root;
  root["source_id"] = summary.source_id;
  root["strategy"] = summary.strategy;
  json abstract;
  abstract["summary"] = summary.abstract.summary;
  abstract["mode"] =
      summary.abstract.mode == AbstractResult::Mode::kRemote ? "remote"
                                                             : "fallback";
  abstract["model_id"] = summary.abstract.model_id;
  root["abstract"] = std::move(abstract);

  json chapters = json::array();
  for (const ChapterSummary& chapter : summary.chapters) {
    json c;
    c["index"] = chapter.chapter_index;
    c["title"] = chapter.title;
    c["sentence_count"] = chapter.chapter_sentence_count;
    json sentences = json::array();
    for (const SummarySentence& s : chapter.sentences) {
      json row;
      row["document_index"] = s.document_index;
      row["rank"] = s.rank;
      row["weight"] = s.weight;
      row["text"] = s.text;
      sentences.push_back(std::move(row));
    }
    c["summary_sentences"] = std::move(sentences);
    chapters.push_back(std::move(c));
  }
  root["chapters"] = std::move(chapters);
  if (summary.rouge) root["rouge"] = rouge_report_to_json(*summary.rouge);
  return dump_canonical(root);
}

}  // namespace booksum
