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

#ifndef BOOKSUM_EMBED_H_
#define BOOKSUM_EMBED_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "booksum/ingest.hpp"

namespace booksum {

// Unit-norm sentence embedding. Providers normalize before returning, so
// downstream cosine similarity is a plain dot product.
struct EmbeddingVector {
  std::vector<float> values;
  std::size_t dim() const { return values.size(); }
};

enum class EmbedProvider { kRemote, kReference };

struct EmbedderConfig {
  EmbedProvider provider = EmbedProvider::kReference;
  std::size_t dim = 256;  // remote services typically use 768 or 1024
  std::string endpoint_url;
  int timeout_ms = 10000;
  std::optional<std::filesystem::path> cache_dir;
};

// Deterministic local embedder: a hashed character-trigram bag. For every
// trigram of every token, an FNV-1a 64-bit hash picks the bucket (h mod dim)
// and the sign (bit 63); the accumulated vector is L2-normalized. An
// all-zero accumulation maps to the first basis vector.
EmbeddingVector reference_embed(const std::vector<std::string>& tokens,
                                std::size_t dim);

// Embeds sentences in order through the configured provider, consulting the
// (provider, dim, content-hash) cache when cache_dir is set. Cache writes
// are write-temp-then-rename.
std::vector<EmbeddingVector> embed_sentences(
    const std::vector<Sentence>& sentences, const EmbedderConfig& cfg);

// Same provider semantics for raw sentence texts.
std::vector<EmbeddingVector> embed_texts(const std::vector<std::string>& texts,
                                         const EmbedderConfig& cfg);

double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace booksum

#endif  // BOOKSUM_EMBED_H_
