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

#include "booksum/rouge.hpp"

#include <algorithm>
#include <cstdio>

#include "booksum/error.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

std::string ngram_key(const std::vector<std::string>& tokens,
                      std::size_t start, std::size_t n) {
  std::string key;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& t = tokens[start + i];
    key += std::to_string(t.size());
    key += ':';
    key += t;
  }
  return key;
}

RougeScore score_from_overlap(double overlap, std::size_t total_candidate,
                              std::size_t total_reference) {
  RougeScore s;
  s.precision =
      total_candidate == 0 ? 0.0 : overlap / static_cast<double>(total_candidate);
  s.recall =
      total_reference == 0 ? 0.0 : overlap / static_cast<double>(total_reference);
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

}  // namespace

std::vector<std::string> metric_tokenize(std::string_view text) {
  return lower_word_tokens(text);
}

NGramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kConfigError, "n-gram order must be >= 1");
  }
  NGramCounts out;
  out.n = n;
  if (tokens.size() < n) return out;
  for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
    ++out.counts[ngram_key(tokens, start, n)];
    ++out.total;
  }
  return out;
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                   std::size_t n) {
  NGramCounts cand = ngrams(metric_tokenize(candidate), n);
  NGramCounts ref = ngrams(metric_tokenize(reference), n);
  double overlap = 0.0;
  for (const auto& [gram, count] : cand.counts) {
    auto it = ref.counts.find(gram);
    if (it != ref.counts.end()) overlap += std::min(count, it->second);
  }
  return score_from_overlap(overlap, cand.total, ref.total);
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    prev.swap(curr);
  }
  return prev[b.size()];
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  std::vector<std::string> cand = metric_tokenize(candidate);
  std::vector<std::string> ref = metric_tokenize(reference);
  double lcs = static_cast<double>(lcs_length(cand, ref));
  return score_from_overlap(lcs, cand.size(), ref.size());
}

RougeReport evaluate_summary(std::string_view candidate,
                             std::string_view reference) {
  if (metric_tokenize(candidate).empty()) {
    throw Error(ErrorCode::kEmptyInput, "candidate has no metric tokens");
  }
  if (metric_tokenize(reference).empty()) {
    throw Error(ErrorCode::kEmptyInput, "reference has no metric tokens");
  }
  RougeReport report;
  report.rouge1 = rouge_n(candidate, reference, 1);
  report.rouge2 = rouge_n(candidate, reference, 2);
  report.rougeL = rouge_l(candidate, reference);
  return report;
}

std::string rouge_report_table(const RougeReport& report) {
  char buf[128];
  std::string out;
  out += "            ROUGE-1     ROUGE-2     ROUGE-L\n";
  auto row = [&](const char* label, double r1, double r2, double rl) {
    std::snprintf(buf, sizeof(buf), "%-10s  %.6f    %.6f    %.6f\n", label, r1,
                  r2, rl);
    out += buf;
  };
  row("Precision", report.rouge1.precision, report.rouge2.precision,
      report.rougeL.precision);
  row("Recall", report.rouge1.recall, report.rouge2.recall,
      report.rougeL.recall);
  row("F-Score", report.rouge1.f1, report.rouge2.f1, report.rougeL.f1);
  return out;
}

}  // namespace booksum
