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

#include "booksum/pdf.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "booksum/error.hpp"
#include "booksum/text.hpp"

namespace booksum {
namespace {

std::optional<std::string> zlib_inflate(const std::uint8_t* data,
                                        std::size_t size) {
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) return std::nullopt;
  zs.next_in = const_cast<Bytef*>(data);
  zs.avail_in = static_cast<uInt>(size);
  std::string out;
  char buf[16384];
  int ret = Z_OK;
  while (ret != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    ret = inflate(&zs, Z_NO_FLUSH);
    if (ret != Z_OK && ret != Z_STREAM_END) {
      inflateEnd(&zs);
      return std::nullopt;
    }
    out.append(buf, sizeof(buf) - zs.avail_out);
    if (ret == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      // Input exhausted without reaching end of stream: truncated.
      inflateEnd(&zs);
      return std::nullopt;
    }
  }
  inflateEnd(&zs);
  return out;
}

// ASCII85 ("<~ ... ~>" base-85) used by some writers in front of Flate.
std::optional<std::string> ascii85_decode(std::string_view in) {
  std::string out;
  out.reserve(in.size() * 4 / 5 + 4);
  std::size_t pos = 0;
  if (in.size() >= 2 && in[0] == '<' && in[1] == '~') pos = 2;
  std::uint32_t group = 0;
  int count = 0;
  auto flush = [&](int bytes) {
    for (int b = 0; b < bytes; ++b) {
      out.push_back(static_cast<char>((group >> (24 - 8 * b)) & 0xFF));
    }
  };
  for (; pos < in.size(); ++pos) {
    char c = in[pos];
    if (is_ascii_space(c)) continue;
    if (c == '~') {
      if (count == 1) return std::nullopt;  // lone leftover digit
      if (count > 1) {
        for (int i = count; i < 5; ++i) group = group * 85 + 84;  // pad 'u'
        flush(count - 1);
      }
      return out;
    }
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') return std::nullopt;
    group = group * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      flush(4);
      group = 0;
      count = 0;
    }
  }
  return out;  // unterminated but salvageable
}

// Appends one byte decoded as Latin-1 so the output stays valid UTF-8.
void append_latin1(std::string* out, unsigned char b) {
  if (b < 0x80) {
    out->push_back(static_cast<char>(b));
  } else {
    out->push_back(static_cast<char>(0xC0 | (b >> 6)));
    out->push_back(static_cast<char>(0x80 | (b & 0x3F)));
  }
}

// Collects shown text from one content stream. Vertical moves of the text
// cursor become newlines; large negative TJ kerns become spaces.
class ContentTextParser {
 public:
  explicit ContentTextParser(std::string_view content) : in_(content) {}

  std::string parse() {
    while (pos_ < in_.size()) {
      skip_space_and_comments();
      if (pos_ >= in_.size()) break;
      char c = in_[pos_];
      if (c == '(') {
        push_string(parse_literal_string());
      } else if (c == '<') {
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '<') {
          pos_ += 2;
          push_other();
        } else {
          push_string(parse_hex_string());
        }
      } else if (c == '>') {
        pos_ += (pos_ + 1 < in_.size() && in_[pos_ + 1] == '>') ? 2 : 1;
        push_other();
      } else if (c == '[') {
        ++pos_;
        in_array_ = true;
        array_items_.clear();
      } else if (c == ']') {
        ++pos_;
        in_array_ = false;
      } else if (c == '/') {
        parse_name();
        push_other();
      } else if (c == '+' || c == '-' || c == '.' ||
                 (c >= '0' && c <= '9')) {
        push_number(parse_number());
      } else {
        handle_operator(parse_keyword());
      }
    }
    return std::move(text_);
  }

 private:
  struct Operand {
    enum class Kind { kString, kNumber, kOther } kind;
    std::string str;
    double num = 0.0;
  };

  void skip_space_and_comments() {
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (c == '%') {
        while (pos_ < in_.size() && in_[pos_] != '\n' && in_[pos_] != '\r') {
          ++pos_;
        }
      } else if (is_ascii_space(c) || c == '\0') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string parse_literal_string() {
    ++pos_;  // '('
    std::string out;
    int depth = 1;
    while (pos_ < in_.size()) {
      char c = in_[pos_++];
      if (c == '\\') {
        if (pos_ >= in_.size()) break;
        char e = in_[pos_++];
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          case 'b': out.push_back('\b'); break;
          case 'f': out.push_back('\f'); break;
          case '(': out.push_back('('); break;
          case ')': out.push_back(')'); break;
          case '\\': out.push_back('\\'); break;
          case '\r':
            if (pos_ < in_.size() && in_[pos_] == '\n') ++pos_;
            break;  // line continuation
          case '\n':
            break;
          default:
            if (e >= '0' && e <= '7') {
              int value = e - '0';
              for (int i = 0; i < 2 && pos_ < in_.size() &&
                              in_[pos_] >= '0' && in_[pos_] <= '7';
                   ++i) {
                value = value * 8 + (in_[pos_++] - '0');
              }
              out.push_back(static_cast<char>(value & 0xFF));
            } else {
              out.push_back(e);
            }
        }
      } else if (c == '(') {
        ++depth;
        out.push_back(c);
      } else if (c == ')') {
        if (--depth == 0) break;
        out.push_back(c);
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  std::string parse_hex_string() {
    ++pos_;  // '<'
    std::string out;
    int hi = -1;
    auto hex_value = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      return -1;
    };
    while (pos_ < in_.size() && in_[pos_] != '>') {
      int v = hex_value(in_[pos_++]);
      if (v < 0) continue;
      if (hi < 0) {
        hi = v;
      } else {
        out.push_back(static_cast<char>((hi << 4) | v));
        hi = -1;
      }
    }
    if (hi >= 0) out.push_back(static_cast<char>(hi << 4));
    if (pos_ < in_.size()) ++pos_;  // '>'
    return out;
  }

  void parse_name() {
    ++pos_;  // '/'
    while (pos_ < in_.size() && !is_ascii_space(in_[pos_]) &&
           std::string_view("()<>[]{}/%").find(in_[pos_]) ==
               std::string_view::npos) {
      ++pos_;
    }
  }

  double parse_number() {
    std::size_t start = pos_;
    if (in_[pos_] == '+' || in_[pos_] == '-') ++pos_;
    while (pos_ < in_.size() &&
           ((in_[pos_] >= '0' && in_[pos_] <= '9') || in_[pos_] == '.')) {
      ++pos_;
    }
    return std::atof(std::string(in_.substr(start, pos_ - start)).c_str());
  }

  std::string parse_keyword() {
    std::size_t start = pos_;
    while (pos_ < in_.size() && !is_ascii_space(in_[pos_]) &&
           std::string_view("()<>[]{}/%").find(in_[pos_]) ==
               std::string_view::npos) {
      ++pos_;
    }
    return std::string(in_.substr(start, pos_ - start));
  }

  void push_string(std::string s) {
    if (in_array_) {
      array_items_.push_back({Operand::Kind::kString, std::move(s), 0.0});
    } else {
      stack_.push_back({Operand::Kind::kString, std::move(s), 0.0});
    }
  }

  void push_number(double v) {
    if (in_array_) {
      array_items_.push_back({Operand::Kind::kNumber, {}, v});
    } else {
      stack_.push_back({Operand::Kind::kNumber, {}, v});
    }
  }

  void push_other() {
    if (!in_array_) stack_.push_back({Operand::Kind::kOther, {}, 0.0});
  }

  double number_operand(std::size_t from_end) const {
    std::size_t n = stack_.size();
    if (from_end >= n) return 0.0;
    const Operand& op = stack_[n - 1 - from_end];
    return op.kind == Operand::Kind::kNumber ? op.num : 0.0;
  }

  const std::string* string_operand() const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->kind == Operand::Kind::kString) return &it->str;
    }
    return nullptr;
  }

  void newline() {
    if (!text_.empty() && text_.back() != '\n') text_.push_back('\n');
  }

  void show(const std::string& bytes) {
    for (unsigned char b : bytes) append_latin1(&text_, b);
  }

  void skip_inline_image() {
    // BI ... ID <binary> EI -- scan for the EI keyword.
    while (pos_ + 1 < in_.size()) {
      if (in_[pos_] == 'E' && in_[pos_ + 1] == 'I' &&
          (pos_ == 0 || is_ascii_space(in_[pos_ - 1])) &&
          (pos_ + 2 >= in_.size() || is_ascii_space(in_[pos_ + 2]))) {
        pos_ += 2;
        return;
      }
      ++pos_;
    }
    pos_ = in_.size();
  }

  void handle_operator(const std::string& op) {
    if (op == "Tj") {
      if (const std::string* s = string_operand()) show(*s);
    } else if (op == "'") {
      newline();
      if (const std::string* s = string_operand()) show(*s);
    } else if (op == "\"") {
      newline();
      if (const std::string* s = string_operand()) show(*s);
    } else if (op == "TJ") {
      for (const Operand& item : array_items_) {
        if (item.kind == Operand::Kind::kString) {
          show(item.str);
        } else if (item.kind == Operand::Kind::kNumber &&
                   item.num <= -180.0) {
          if (!text_.empty() && text_.back() != ' ' && text_.back() != '\n') {
            text_.push_back(' ');
          }
        }
      }
      array_items_.clear();
    } else if (op == "Td" || op == "TD") {
      if (number_operand(0) != 0.0) newline();  // ty
    } else if (op == "T*") {
      newline();
    } else if (op == "Tm") {
      double y = number_operand(0);  // f component
      if (have_y_ && std::abs(y - last_y_) > 1e-9) newline();
      last_y_ = y;
      have_y_ = true;
    } else if (op == "BT" || op == "ET") {
      // line tracking continues across text blocks within a page
    } else if (op == "BI") {
      skip_inline_image();
    }
    stack_.clear();
    if (op != "TJ") array_items_.clear();
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::string text_;
  std::vector<Operand> stack_;
  std::vector<Operand> array_items_;
  bool in_array_ = false;
  double last_y_ = 0.0;
  bool have_y_ = false;
};

// Returns the direct /Length value from the dictionary window before a
// stream keyword, or nullopt when absent or an indirect reference.
std::optional<std::size_t> direct_length(std::string_view window) {
  std::size_t at = window.rfind("/Length");
  if (at == std::string_view::npos) return std::nullopt;
  std::size_t p = at + 7;
  while (p < window.size() && is_ascii_space(window[p])) ++p;
  std::size_t digits_start = p;
  while (p < window.size() && window[p] >= '0' && window[p] <= '9') ++p;
  if (p == digits_start) return std::nullopt;
  std::size_t value = std::strtoull(
      std::string(window.substr(digits_start, p - digits_start)).c_str(),
      nullptr, 10);
  // "/Length 12 0 R" is an indirect reference; fall back to scanning.
  std::size_t q = p;
  while (q < window.size() && is_ascii_space(window[q])) ++q;
  std::size_t gen_start = q;
  while (q < window.size() && window[q] >= '0' && window[q] <= '9') ++q;
  if (q > gen_start) {
    while (q < window.size() && is_ascii_space(window[q])) ++q;
    if (q < window.size() && window[q] == 'R') return std::nullopt;
  }
  return value;
}

}  // namespace

std::string BuiltinPdfBackend::extract(
    const std::vector<std::uint8_t>& payload) const {
  std::string_view file(reinterpret_cast<const char*>(payload.data()),
                        payload.size());
  if (file.substr(0, 1024).find("%PDF-") == std::string_view::npos) {
    throw Error(ErrorCode::kExtractionFailed, "not a PDF file");
  }
  if (file.find("/Encrypt") != std::string_view::npos) {
    throw Error(ErrorCode::kExtractionFailed, "encrypted PDF is unsupported");
  }

  std::string text;
  std::size_t search = 0;
  while (true) {
    std::size_t kw = file.find("stream", search);
    if (kw == std::string_view::npos) break;
    // Require the bare keyword, not "endstream".
    if (kw >= 3 && file.compare(kw - 3, 9, "endstream") == 0) {
      search = kw + 6;
      continue;
    }
    std::size_t data_start = kw + 6;
    if (data_start < file.size() && file[data_start] == '\r') ++data_start;
    if (data_start < file.size() && file[data_start] == '\n') ++data_start;

    std::string_view window =
        file.substr(kw > 2048 ? kw - 2048 : 0, kw - (kw > 2048 ? kw - 2048 : 0));
    std::size_t data_end;
    if (auto len = direct_length(window);
        len && data_start + *len <= file.size() &&
        file.find("endstream", data_start + *len) <=
            data_start + *len + 4) {
      data_end = data_start + *len;
    } else {
      data_end = file.find("endstream", data_start);
      if (data_end == std::string_view::npos) break;
      while (data_end > data_start &&
             (file[data_end - 1] == '\n' || file[data_end - 1] == '\r')) {
        --data_end;
      }
    }
    search = file.find("endstream", data_end);
    search = search == std::string_view::npos ? file.size() : search + 9;

    bool flate = window.find("/FlateDecode") != std::string_view::npos;
    bool a85 = window.find("/ASCII85Decode") != std::string_view::npos;
    bool other_filter = !flate && !a85 &&
                        window.find("/Filter") != std::string_view::npos;
    std::string content(file.substr(data_start, data_end - data_start));
    if (other_filter) continue;  // image or otherwise undecodable stream
    if (a85) {
      auto decoded = ascii85_decode(content);
      if (!decoded) continue;
      content = std::move(*decoded);
    }
    if (flate) {
      auto inflated = zlib_inflate(
          reinterpret_cast<const std::uint8_t*>(content.data()),
          content.size());
      if (!inflated) continue;  // damaged or not really deflate
      content = std::move(*inflated);
    }
    if (content.find("BT") == std::string::npos) continue;

    std::string page_text = ContentTextParser(content).parse();
    if (trim(page_text).empty()) continue;
    if (!text.empty() && text.back() != '\n') text.push_back('\n');
    text += page_text;
  }

  if (trim(text).empty()) {
    throw Error(ErrorCode::kExtractionFailed,
                "no extractable text (image-only or unsupported encoding)");
  }
  return text;
}

}  // namespace booksum
