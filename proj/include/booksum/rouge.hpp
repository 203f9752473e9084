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

#ifndef BOOKSUM_ROUGE_H_
#define BOOKSUM_ROUGE_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace booksum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Multiset of n-grams keyed by a length-prefixed join of the tokens, which
// keeps distinct token sequences from colliding.
struct NGramCounts {
  std::size_t n = 1;
  std::unordered_map<std::string, int> counts;
  std::size_t total = 0;  // number of n-gram windows, with multiplicity
};

// Metric tokenization: lowercase, pre_tokenize, drop pure punctuation. No
// stopword removal and no stemming, so surface forms are compared.
std::vector<std::string> metric_tokenize(std::string_view text);

// Sliding-window n-grams with multiplicity; fewer than n tokens yields an
// empty multiset.
NGramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n);

// Clipped n-gram overlap: every shared n-gram counts at most
// min(candidate count, reference count). Zero denominators score 0, never
// NaN; f1 is the harmonic mean.
RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                   std::size_t n);

// Longest common subsequence length, O(|a|*|b|) dynamic programming.
std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b);

RougeScore rouge_l(std::string_view candidate, std::string_view reference);

struct RougeReport {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
};

// ROUGE-1/2/L in one report. Throws Error(kEmptyInput) when either side has
// no metric tokens.
RougeReport evaluate_summary(std::string_view candidate,
                             std::string_view reference);

// Aligned three-row text table (Precision / Recall / F-Score x variants).
std::string rouge_report_table(const RougeReport& report);

}  // namespace booksum

#endif  // BOOKSUM_ROUGE_H_
