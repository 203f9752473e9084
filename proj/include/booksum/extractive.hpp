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

#ifndef BOOKSUM_EXTRACTIVE_H_
#define BOOKSUM_EXTRACTIVE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "booksum/chapters.hpp"
#include "booksum/embed.hpp"
#include "booksum/pagerank.hpp"

namespace booksum {

// Scoring result for one sentence. sentence_index is the position within the
// scored chapter; ranks are a permutation of 1..n with 1 best, ties broken
// toward the lower index.
struct ScoredSentence {
  std::size_t sentence_index = 0;
  double weight = 0.0;
  std::size_t rank = 0;
};

enum class Strategy { kCentroid, kLuhn, kTextRank, kLexRank, kLsa };

std::optional<Strategy> strategy_from_name(std::string_view name);
std::string_view strategy_name(Strategy strategy);

struct SummaryBudget {
  enum class Mode { kRatio, kCount };
  Mode mode = Mode::kRatio;
  double ratio = 0.2;
  std::size_t count = 0;
};

// Number of sentences the budget selects from a chapter of n: ceil(ratio*n)
// or min(count, n), at least 1. Throws Error(kBudgetInvalid).
std::size_t budget_target(const SummaryBudget& budget, std::size_t n);

struct LuhnParams {
  int gap = 4;            // max non-significant tokens inside a window
  double top_frac = 0.1;  // fraction of eligible terms that are significant
  bool positional = true;
};

struct LexRankParams {
  double threshold = 0.1;  // cosine cutoff for the binary adjacency
  PageRankParams pagerank;
};

struct LsaParams {
  int k_topics = 0;  // 0 = follow the summary budget
};

struct GraphScores {
  std::vector<ScoredSentence> scored;
  bool converged = true;
  int iterations = 0;
};

// Assigns ranks 1..n by descending weight, ties toward the lower index.
// Output is ordered by sentence index.
std::vector<ScoredSentence> rank_by_weight(const std::vector<double>& weights);

// Cosine of each embedding against the normalized mean embedding, clamped at
// zero.
std::vector<ScoredSentence> score_centroid(
    const std::vector<EmbeddingVector>& embeddings);

// Significant-word window scoring: the best window's significant_count^2 /
// window_length, optionally boosted by 1 + 1/(1+i) for early sentences.
std::vector<ScoredSentence> score_luhn(const Chapter& chapter,
                                       const LuhnParams& params);

// Token-overlap similarity graph (distinct shared clean tokens over
// log(1+len_i) + log(1+len_j)) ranked with weighted PageRank.
GraphScores score_textrank(const Chapter& chapter,
                           const PageRankParams& params);

// Binary cosine>=threshold adjacency over smoothed TF-IDF vectors, ranked
// with PageRank on the row-normalized adjacency.
GraphScores score_lexrank(const Chapter& chapter, const LexRankParams& params);

// Gong-Liu topic selection over the thin SVD of the term x sentence count
// matrix: topic t hands its singular value to the strongest unselected
// sentence; everything else scores 0.
std::vector<ScoredSentence> score_lsa(const Chapter& chapter,
                                      const LsaParams& params);

// Picks the budgeted sentences and returns them in original document order.
// With embeddings present the pick is greedy MMR (argmax lambda*weight -
// (1-lambda)*max cosine to the already picked); otherwise plain top-k by
// rank.
std::vector<Sentence> select(const std::vector<ScoredSentence>& scored,
                             const Chapter& chapter,
                             const SummaryBudget& budget,
                             const std::vector<EmbeddingVector>* embeddings,
                             double mmr_lambda);

// Same selection, returning chapter positions instead of sentence copies.
std::vector<std::size_t> select_positions(
    const std::vector<ScoredSentence>& scored, const Chapter& chapter,
    const SummaryBudget& budget,
    const std::vector<EmbeddingVector>* embeddings, double mmr_lambda);

struct ExtractiveConfig {
  EmbedderConfig embedder;
  double mmr_lambda = 0.7;  // applied only when embeddings exist (centroid)
  LuhnParams luhn;
  PageRankParams textrank;
  LexRankParams lexrank;
  LsaParams lsa;
};

struct SummarySentence {
  std::size_t document_index = 0;
  std::size_t chapter_position = 0;
  std::string text;
  double weight = 0.0;
  std::size_t rank = 0;
};

struct ChapterSummary {
  std::size_t chapter_index = 0;
  std::string title;
  std::size_t chapter_sentence_count = 0;
  std::vector<SummarySentence> sentences;  // original order, verbatim text
  bool scorer_converged = true;
};

ChapterSummary summarize_chapter(const Chapter& chapter, Strategy strategy,
                                 const SummaryBudget& budget,
                                 const ExtractiveConfig& cfg);

}  // namespace booksum

#endif  // BOOKSUM_EXTRACTIVE_H_
