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

#include "booksum/embed.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "booksum/error.hpp"
#include "booksum/http_url.hpp"
#include "booksum/kernels.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

constexpr float kZeroNormEps = 1e-12f;

void normalize_or_basis(std::vector<float>* values) {
  float norm = kernels::l2_norm(values->data(), values->size());
  if (norm < kZeroNormEps) {
    std::fill(values->begin(), values->end(), 0.0f);
    (*values)[0] = 1.0f;
    return;
  }
  kernels::scale(values->data(), 1.0f / norm, values->size());
}

// --- embedding cache -------------------------------------------------------
// One file per (provider, dim, content hash): 4-byte little-endian dim
// header followed by dim little-endian f32 values.

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 std::string_view provider, std::size_t dim,
                                 std::uint64_t content_hash) {
  char name[64];
  std::snprintf(name, sizeof(name), "%.*s-d%zu-%016llx.vec",
                static_cast<int>(provider.size()), provider.data(), dim,
                static_cast<unsigned long long>(content_hash));
  return dir / name;
}

void put_le32(std::string* out, std::uint32_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
}

std::uint32_t get_le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::optional<EmbeddingVector> cache_load(const std::filesystem::path& path,
                                          std::size_t dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() != 4 + 4 * dim) return std::nullopt;
  const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (get_le32(p) != dim) return std::nullopt;
  EmbeddingVector v;
  v.values.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::uint32_t raw = get_le32(p + 4 + 4 * i);
    float f;
    static_assert(sizeof(f) == sizeof(raw));
    std::memcpy(&f, &raw, sizeof(f));
    v.values[i] = f;
  }
  return v;
}

void cache_store(const std::filesystem::path& path, const EmbeddingVector& v) {
  std::string bytes;
  bytes.reserve(4 + 4 * v.dim());
  put_le32(&bytes, static_cast<std::uint32_t>(v.dim()));
  for (float f : v.values) {
    std::uint32_t raw;
    std::memcpy(&raw, &f, sizeof(raw));
    put_le32(&bytes, raw);
  }
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is best-effort
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

// --- providers -------------------------------------------------------------

class RemoteEmbedClient {
 public:
  explicit RemoteEmbedClient(const EmbedderConfig& cfg) : cfg_(cfg) {
    if (cfg.endpoint_url.empty()) {
      throw Error(ErrorCode::kConfigError,
                  "remote embedder requires an endpoint url");
    }
  }

  // Single-flight: one request at a time per client.
  std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) {
    std::lock_guard<std::mutex> lock(mu_);
    HttpUrl url = HttpUrl::parse(cfg_.endpoint_url);
    httplib::Client client(url.origin);
    client.set_connection_timeout(0, cfg_.timeout_ms * 1000LL);
    client.set_read_timeout(0, cfg_.timeout_ms * 1000LL);

    nlohmann::json body;
    body["sentences"] = texts;
    httplib::Result res =
        client.Post(url.path_prefix + "/embed", body.dump(),
                    "application/json");
    if (!res) {
      throw Error(ErrorCode::kRemoteUnavailable,
                  "embed service unreachable: " +
                      httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kRemoteUnavailable,
                  "embed service returned HTTP " +
                      std::to_string(res->status));
    }
    nlohmann::json parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("vectors") ||
        !parsed.contains("dim")) {
      throw Error(ErrorCode::kRemoteUnavailable,
                  "embed service returned malformed JSON");
    }
    std::size_t dim = parsed["dim"].get<std::size_t>();
    if (dim != cfg_.dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embed service dim " + std::to_string(dim) +
                      " != configured dim " + std::to_string(cfg_.dim));
    }
    const auto& vectors = parsed["vectors"];
    if (!vectors.is_array() || vectors.size() != texts.size()) {
      throw Error(ErrorCode::kRemoteUnavailable,
                  "embed service returned wrong vector count");
    }
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& row : vectors) {
      EmbeddingVector v;
      v.values.reserve(dim);
      if (!row.is_array() || row.size() != dim) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "embed service returned a vector of wrong length");
      }
      for (const auto& x : row) v.values.push_back(x.get<float>());
      for (float f : v.values) {
        if (!std::isfinite(f)) {
          throw Error(ErrorCode::kRemoteUnavailable,
                      "embed service returned non-finite values");
        }
      }
      normalize_or_basis(&v.values);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  EmbedderConfig cfg_;
  std::mutex mu_;
};

const char* provider_name(EmbedProvider p) {
  return p == EmbedProvider::kReference ? "reference" : "remote";
}

}  // namespace

EmbeddingVector reference_embed(const std::vector<std::string>& tokens,
                                std::size_t dim) {
  if (dim < 16) {
    throw Error(ErrorCode::kConfigError,
                "reference embedder requires dim >= 16");
  }
  EmbeddingVector v;
  v.values.assign(dim, 0.0f);
  for (const std::string& token : tokens) {
    if (token.size() < 3) continue;
    for (std::size_t i = 0; i + 3 <= token.size(); ++i) {
      std::uint64_t h = fnv1a64(std::string_view(token).substr(i, 3));
      std::size_t bucket = static_cast<std::size_t>(h % dim);
      float sign = (h & (1ull << 63)) != 0 ? -1.0f : 1.0f;
      v.values[bucket] += sign;
    }
  }
  normalize_or_basis(&v.values);
  return v;
}

std::vector<EmbeddingVector> embed_texts(const std::vector<std::string>& texts,
                                         const EmbedderConfig& cfg) {
  if (texts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no sentences to embed");
  }
  if (cfg.dim == 0) {
    throw Error(ErrorCode::kConfigError, "embedding dim must be positive");
  }
  const char* provider = provider_name(cfg.provider);

  std::vector<EmbeddingVector> out(texts.size());
  std::vector<std::size_t> misses;
  if (cfg.cache_dir) {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      auto cached = cache_load(
          cache_path(*cfg.cache_dir, provider, cfg.dim, fnv1a64(texts[i])),
          cfg.dim);
      if (cached) {
        out[i] = std::move(*cached);
      } else {
        misses.push_back(i);
      }
    }
  } else {
    misses.resize(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) misses[i] = i;
  }

  if (!misses.empty()) {
    if (cfg.provider == EmbedProvider::kReference) {
      for (std::size_t i : misses) {
        out[i] = reference_embed(lower_word_tokens(texts[i]), cfg.dim);
      }
    } else {
      std::vector<std::string> batch;
      batch.reserve(misses.size());
      for (std::size_t i : misses) batch.push_back(texts[i]);
      RemoteEmbedClient client(cfg);
      std::vector<EmbeddingVector> vectors = client.embed(batch);
      for (std::size_t k = 0; k < misses.size(); ++k) {
        out[misses[k]] = std::move(vectors[k]);
      }
    }
    if (cfg.cache_dir) {
      for (std::size_t i : misses) {
        cache_store(
            cache_path(*cfg.cache_dir, provider, cfg.dim, fnv1a64(texts[i])),
            out[i]);
      }
    }
  }
  return out;
}

std::vector<EmbeddingVector> embed_sentences(
    const std::vector<Sentence>& sentences, const EmbedderConfig& cfg) {
  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const Sentence& s : sentences) texts.push_back(s.text);
  return embed_texts(texts, cfg);
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine of vectors with different dims");
  }
  // Unit-norm vectors: cosine is the dot product.
  return kernels::dot(a.values.data(), b.values.data(), a.dim());
}

}  // namespace booksum
