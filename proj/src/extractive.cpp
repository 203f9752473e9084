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

#include "booksum/extractive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "booksum/error.hpp"
#include "booksum/kernels.hpp"

namespace booksum {
namespace {

// Distinct tokens of a sentence as a sorted vector, for cheap intersection.
std::vector<std::string> distinct_sorted(const std::vector<std::string>& v) {
  std::vector<std::string> out(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t intersection_size(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = a[i].compare(b[j]);
    if (cmp == 0) {
      ++count;
      ++i;
      ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

void require_non_empty(const Chapter& chapter) {
  if (chapter.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "chapter " + std::to_string(chapter.index) +
                    " has no sentences");
  }
}

}  // namespace

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "centroid") return Strategy::kCentroid;
  if (name == "luhn") return Strategy::kLuhn;
  if (name == "textrank") return Strategy::kTextRank;
  if (name == "lexrank") return Strategy::kLexRank;
  if (name == "lsa") return Strategy::kLsa;
  return std::nullopt;
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kCentroid: return "centroid";
    case Strategy::kLuhn: return "luhn";
    case Strategy::kTextRank: return "textrank";
    case Strategy::kLexRank: return "lexrank";
    case Strategy::kLsa: return "lsa";
  }
  return "centroid";
}

std::size_t budget_target(const SummaryBudget& budget, std::size_t n) {
  if (n == 0) return 0;
  std::size_t k = 0;
  if (budget.mode == SummaryBudget::Mode::kRatio) {
    if (!(budget.ratio > 0.0) || budget.ratio > 1.0) {
      throw Error(ErrorCode::kBudgetInvalid,
                  "budget ratio must be in (0, 1]");
    }
    // The epsilon keeps exact products like 0.07 * 100 from ceiling up.
    k = static_cast<std::size_t>(
        std::ceil(budget.ratio * static_cast<double>(n) - 1e-9));
  } else {
    if (budget.count == 0) {
      throw Error(ErrorCode::kBudgetInvalid, "budget count must be >= 1");
    }
    k = budget.count;
  }
  if (k < 1) k = 1;
  return std::min(k, n);
}

std::vector<ScoredSentence> rank_by_weight(
    const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  std::vector<ScoredSentence> out(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t idx = order[pos];
    out[idx] = {idx, weights[idx], pos + 1};
  }
  return out;
}

std::vector<ScoredSentence> score_centroid(
    const std::vector<EmbeddingVector>& embeddings) {
  if (embeddings.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no embeddings to score");
  }
  const std::size_t dim = embeddings[0].dim();
  for (const EmbeddingVector& e : embeddings) {
    if (e.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embeddings disagree on dimension");
    }
  }
  std::vector<float> centroid(dim, 0.0f);
  for (const EmbeddingVector& e : embeddings) {
    kernels::add(centroid.data(), e.values.data(), dim);
  }
  kernels::scale(centroid.data(), 1.0f / static_cast<float>(embeddings.size()),
                 dim);
  float norm = kernels::l2_norm(centroid.data(), dim);

  std::vector<double> weights(embeddings.size(), 0.0);
  if (norm > 1e-12f) {
    kernels::scale(centroid.data(), 1.0f / norm, dim);
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
      float sim =
          kernels::dot(embeddings[i].values.data(), centroid.data(), dim);
      weights[i] = std::max(0.0, static_cast<double>(sim));
    }
  }
  return rank_by_weight(weights);
}

std::vector<ScoredSentence> score_luhn(const Chapter& chapter,
                                       const LuhnParams& params) {
  require_non_empty(chapter);
  if (params.gap < 0 || params.top_frac <= 0.0 || params.top_frac > 1.0) {
    throw Error(ErrorCode::kConfigError, "invalid luhn parameters");
  }

  std::unordered_map<std::string, int> counts;
  for (const Sentence& s : chapter.sentences) {
    for (const std::string& t : s.clean_tokens) ++counts[t];
  }
  // Terms seen at least twice, most frequent first.
  std::vector<std::pair<std::string, int>> eligible;
  for (const auto& [term, count] : counts) {
    if (count >= 2) eligible.emplace_back(term, count);
  }
  std::sort(eligible.begin(), eligible.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::size_t k_sig = static_cast<std::size_t>(std::ceil(
      params.top_frac * static_cast<double>(eligible.size()) - 1e-9));
  k_sig = std::min(k_sig, eligible.size());
  std::unordered_map<std::string, bool> significant;
  for (std::size_t i = 0; i < k_sig; ++i) significant[eligible[i].first] = true;

  std::vector<double> weights(chapter.sentences.size(), 0.0);
  for (std::size_t i = 0; i < chapter.sentences.size(); ++i) {
    const std::vector<std::string>& tokens = chapter.sentences[i].clean_tokens;
    std::vector<std::size_t> sig_pos;
    for (std::size_t p = 0; p < tokens.size(); ++p) {
      if (significant.count(tokens[p])) sig_pos.push_back(p);
    }
    // Maximal clusters of significant words: a cluster breaks where more
    // than gap non-significant tokens separate two of them.
    double best = 0.0;
    std::size_t a = 0;
    while (a < sig_pos.size()) {
      std::size_t b = a;
      while (b + 1 < sig_pos.size() &&
             sig_pos[b + 1] - sig_pos[b] - 1 <=
                 static_cast<std::size_t>(params.gap)) {
        ++b;
      }
      double sig_count = static_cast<double>(b - a + 1);
      double length = static_cast<double>(sig_pos[b] - sig_pos[a] + 1);
      best = std::max(best, sig_count * sig_count / length);
      a = b + 1;
    }
    weights[i] = best;
    if (params.positional) {
      weights[i] *= 1.0 + 1.0 / (1.0 + static_cast<double>(i));
    }
  }
  return rank_by_weight(weights);
}

GraphScores score_textrank(const Chapter& chapter,
                           const PageRankParams& params) {
  require_non_empty(chapter);
  const std::size_t n = chapter.sentences.size();

  std::vector<std::vector<std::string>> distinct(n);
  std::vector<double> log_len(n);
  for (std::size_t i = 0; i < n; ++i) {
    distinct[i] = distinct_sorted(chapter.sentences[i].clean_tokens);
    log_len[i] = std::log(
        1.0 + static_cast<double>(chapter.sentences[i].clean_tokens.size()));
  }

  std::vector<std::vector<std::pair<int, double>>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t overlap = intersection_size(distinct[i], distinct[j]);
      if (overlap == 0) continue;
      double denom = log_len[i] + log_len[j];
      if (denom <= 0.0) continue;
      double weight = static_cast<double>(overlap) / denom;
      adjacency[i].emplace_back(static_cast<int>(j), weight);
      adjacency[j].emplace_back(static_cast<int>(i), weight);
    }
  }

  PageRankResult pr = weighted_pagerank(adjacency, params);
  GraphScores out;
  out.scored = rank_by_weight(pr.weights);
  out.converged = pr.converged;
  out.iterations = pr.iterations;
  return out;
}

GraphScores score_lexrank(const Chapter& chapter,
                          const LexRankParams& params) {
  require_non_empty(chapter);
  const std::size_t n = chapter.sentences.size();

  // Smoothed IDF over the chapter's sentences: ln(n/(1+df)) + 1.
  std::unordered_map<std::string, int> df;
  std::vector<std::unordered_map<std::string, int>> tf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string& t : chapter.sentences[i].clean_tokens) {
      if (++tf[i][t] == 1) ++df[t];
    }
  }
  // Term ids in first-seen order so sparse dot products accumulate in a
  // platform-independent order.
  std::unordered_map<std::string, int> term_ids;
  term_ids.reserve(df.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string& t : chapter.sentences[i].clean_tokens) {
      term_ids.emplace(t, static_cast<int>(term_ids.size()));
    }
  }

  std::vector<std::vector<std::pair<int, double>>> vectors(n);
  std::vector<double> norms(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    vectors[i].reserve(tf[i].size());
    for (const auto& [term, count] : tf[i]) {
      double idf =
          std::log(static_cast<double>(n) / (1.0 + df[term])) + 1.0;
      vectors[i].emplace_back(term_ids[term],
                              static_cast<double>(count) * idf);
    }
    std::sort(vectors[i].begin(), vectors[i].end());
    for (const auto& [id, value] : vectors[i]) {
      (void)id;
      norms[i] += value * value;
    }
    norms[i] = std::sqrt(norms[i]);
  }

  auto sparse_dot = [](const std::vector<std::pair<int, double>>& a,
                       const std::vector<std::pair<int, double>>& b) {
    double acc = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first == b[j].first) {
        acc += a[i].second * b[j].second;
        ++i;
        ++j;
      } else if (a[i].first < b[j].first) {
        ++i;
      } else {
        ++j;
      }
    }
    return acc;
  };

  std::vector<std::vector<std::pair<int, double>>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norms[i] <= 0.0 || norms[j] <= 0.0) continue;
      double cos = sparse_dot(vectors[i], vectors[j]) / (norms[i] * norms[j]);
      if (cos >= params.threshold) {
        adjacency[i].emplace_back(static_cast<int>(j), 1.0);
        adjacency[j].emplace_back(static_cast<int>(i), 1.0);
      }
    }
  }

  PageRankResult pr = weighted_pagerank(adjacency, params.pagerank);
  GraphScores out;
  out.scored = rank_by_weight(pr.weights);
  out.converged = pr.converged;
  out.iterations = pr.iterations;
  return out;
}

std::vector<ScoredSentence> score_lsa(const Chapter& chapter,
                                      const LsaParams& params) {
  require_non_empty(chapter);
  if (params.k_topics < 1) {
    throw Error(ErrorCode::kConfigError, "lsa needs k_topics >= 1");
  }
  const std::size_t n = chapter.sentences.size();

  std::unordered_map<std::string, int> term_ids;
  for (const Sentence& s : chapter.sentences) {
    for (const std::string& t : s.clean_tokens) {
      term_ids.emplace(t, static_cast<int>(term_ids.size()));
    }
  }
  if (term_ids.empty()) {
    throw Error(ErrorCode::kDegenerateMatrix,
                "no clean tokens in chapter " +
                    std::to_string(chapter.index));
  }

  Eigen::MatrixXd counts =
      Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(term_ids.size()),
                            static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (const std::string& t : chapter.sentences[j].clean_tokens) {
      counts(term_ids[t], static_cast<Eigen::Index>(j)) += 1.0;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(counts, Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const Eigen::MatrixXd& v = svd.matrixV();  // n x min(terms, n)

  Eigen::Index rank = 0;
  for (Eigen::Index t = 0; t < sigma.size(); ++t) {
    if (sigma(t) > sigma(0) * 1e-12) ++rank;
  }
  Eigen::Index topics =
      std::min<Eigen::Index>(params.k_topics, rank);

  // Loadings that differ only by rounding noise count as ties and resolve
  // to the lower index.
  constexpr double kLoadingTieEps = 1e-9;
  std::vector<double> weights(n, 0.0);
  std::vector<bool> selected(n, false);
  for (Eigen::Index t = 0; t < topics; ++t) {
    std::size_t best = n;
    double best_loading = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (selected[j]) continue;
      double loading = std::abs(v(static_cast<Eigen::Index>(j), t));
      if (loading > best_loading + kLoadingTieEps) {
        best_loading = loading;
        best = j;
      }
    }
    if (best == n) break;
    selected[best] = true;
    weights[best] = sigma(t);
  }
  return rank_by_weight(weights);
}

std::vector<std::size_t> select_positions(
    const std::vector<ScoredSentence>& scored, const Chapter& chapter,
    const SummaryBudget& budget,
    const std::vector<EmbeddingVector>* embeddings, double mmr_lambda) {
  const std::size_t n = chapter.sentences.size();
  if (scored.size() != n) {
    throw Error(ErrorCode::kConfigError,
                "scored list does not cover the chapter");
  }
  const std::size_t k = budget_target(budget, n);

  std::vector<std::size_t> picked;
  picked.reserve(k);
  if (embeddings == nullptr) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return scored[a].rank < scored[b].rank;
    });
    picked.assign(order.begin(), order.begin() + static_cast<long>(k));
  } else {
    if (embeddings->size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embedding count does not match the chapter");
    }
    std::vector<bool> taken(n, false);
    std::vector<double> max_sim(n, 0.0);
    for (std::size_t round = 0; round < k; ++round) {
      std::size_t best = n;
      double best_score = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        double score = mmr_lambda * scored[i].weight -
                       (1.0 - mmr_lambda) * (round == 0 ? 0.0 : max_sim[i]);
        if (best == n || score > best_score) {
          best = i;
          best_score = score;
        }
      }
      taken[best] = true;
      picked.push_back(best);
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        max_sim[i] = std::max(
            max_sim[i], cosine((*embeddings)[i], (*embeddings)[best]));
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<Sentence> select(const std::vector<ScoredSentence>& scored,
                             const Chapter& chapter,
                             const SummaryBudget& budget,
                             const std::vector<EmbeddingVector>* embeddings,
                             double mmr_lambda) {
  std::vector<Sentence> out;
  for (std::size_t pos :
       select_positions(scored, chapter, budget, embeddings, mmr_lambda)) {
    out.push_back(chapter.sentences[pos]);
  }
  return out;
}

ChapterSummary summarize_chapter(const Chapter& chapter, Strategy strategy,
                                 const SummaryBudget& budget,
                                 const ExtractiveConfig& cfg) {
  require_non_empty(chapter);

  std::vector<ScoredSentence> scored;
  std::vector<EmbeddingVector> embeddings;
  bool use_mmr = false;
  bool converged = true;

  switch (strategy) {
    case Strategy::kCentroid: {
      embeddings = embed_sentences(chapter.sentences, cfg.embedder);
      scored = score_centroid(embeddings);
      use_mmr = true;
      break;
    }
    case Strategy::kLuhn:
      scored = score_luhn(chapter, cfg.luhn);
      break;
    case Strategy::kTextRank: {
      GraphScores gs = score_textrank(chapter, cfg.textrank);
      scored = std::move(gs.scored);
      converged = gs.converged;
      break;
    }
    case Strategy::kLexRank: {
      GraphScores gs = score_lexrank(chapter, cfg.lexrank);
      scored = std::move(gs.scored);
      converged = gs.converged;
      break;
    }
    case Strategy::kLsa: {
      LsaParams params = cfg.lsa;
      if (params.k_topics == 0) {
        params.k_topics = static_cast<int>(
            budget_target(budget, chapter.sentences.size()));
      }
      scored = score_lsa(chapter, params);
      break;
    }
  }
  if (!converged) {
    std::fprintf(stderr,
                 "booksum: warning: PageRank did not converge for chapter "
                 "%zu (%s); using best iterate\n",
                 chapter.index, std::string(strategy_name(strategy)).c_str());
  }

  std::vector<std::size_t> positions =
      select_positions(scored, chapter, budget,
                       use_mmr ? &embeddings : nullptr, cfg.mmr_lambda);

  ChapterSummary summary;
  summary.chapter_index = chapter.index;
  summary.title = chapter.title;
  summary.chapter_sentence_count = chapter.sentences.size();
  summary.scorer_converged = converged;
  for (std::size_t pos : positions) {
    const Sentence& s = chapter.sentences[pos];
    summary.sentences.push_back(
        {s.index, pos, s.text, scored[pos].weight, scored[pos].rank});
  }
  return summary;
}

}  // namespace booksum
