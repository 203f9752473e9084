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

#ifndef BOOKSUM_PDF_H_
#define BOOKSUM_PDF_H_

#include <cstdint>
#include <string>
#include <vector>

namespace booksum {

// Text extraction is behind this interface so the pipeline core never
// depends on a PDF library; the plaintext path bypasses it entirely.
class TextExtractionBackend {
 public:
  virtual ~TextExtractionBackend() = default;
  virtual std::string name() const = 0;
  // Returns extracted text with page breaks normalized to '\n'. Throws
  // Error(kExtractionFailed) for encrypted, image-only or malformed input.
  virtual std::string extract(const std::vector<std::uint8_t>& payload) const = 0;
};

// Minimal built-in extractor for text-based PDFs: scans content streams
// (plain or FlateDecode), tokenizes them and collects the string operands of
// the text-showing operators (Tj, TJ, ', "). Vertical text moves become
// newlines. Handles single-byte (Latin-1 style) encodings only; encrypted
// documents and documents with no text operators are rejected.
class BuiltinPdfBackend final : public TextExtractionBackend {
 public:
  std::string name() const override { return "builtin"; }
  std::string extract(const std::vector<std::uint8_t>& payload) const override;
};

}  // namespace booksum

#endif  // BOOKSUM_PDF_H_
