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

#ifndef BOOKSUM_TEXT_H_
#define BOOKSUM_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace booksum {

// Splits on whitespace (dropped) and on punctuation, where every punctuation
// character becomes its own single-character token. Bytes outside ASCII are
// treated as word characters.
std::vector<std::string> pre_tokenize(std::string_view text);

// ASCII lowercase; multi-byte UTF-8 sequences pass through untouched.
std::string to_lower(std::string_view text);

// True for a non-empty token made entirely of ASCII punctuation.
bool is_pure_punct(std::string_view token);

bool is_ascii_space(char c);
bool is_ascii_punct(char c);
bool is_ascii_upper(char c);

std::string_view trim(std::string_view text);

// Lowercased word tokens with pure-punctuation tokens dropped. Shared
// normalization for the ROUGE metrics and the reference embedder.
std::vector<std::string> lower_word_tokens(std::string_view text);

// FNV-1a over the raw bytes. Stable across platforms; used for embedding
// hashing and cache keys.
std::uint64_t fnv1a64(std::string_view bytes);

// Throws Error(kUndecodableInput) when the buffer is not valid UTF-8.
void require_valid_utf8(std::string_view bytes, std::string_view what);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace booksum

#endif  // BOOKSUM_TEXT_H_
