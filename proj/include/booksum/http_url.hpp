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

#ifndef BOOKSUM_HTTP_URL_H_
#define BOOKSUM_HTTP_URL_H_

#include <string>

#include "booksum/error.hpp"

namespace booksum {

// Splits "http://host:port/prefix" into the origin the HTTP client connects
// to and the path prefix the service routes live under.
struct HttpUrl {
  std::string origin;       // scheme://host[:port]
  std::string path_prefix;  // "" or "/prefix" without trailing slash

  static HttpUrl parse(const std::string& url) {
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos || scheme_end == 0) {
      throw Error(ErrorCode::kConfigError,
                  "endpoint url must look like http://host:port[/prefix]: " +
                      url);
    }
    std::size_t path_start = url.find('/', scheme_end + 3);
    HttpUrl out;
    if (path_start == std::string::npos) {
      out.origin = url;
    } else {
      out.origin = url.substr(0, path_start);
      out.path_prefix = url.substr(path_start);
      while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
        out.path_prefix.pop_back();
      }
    }
    if (out.origin.size() == scheme_end + 3) {
      throw Error(ErrorCode::kConfigError, "endpoint url has no host: " + url);
    }
    return out;
  }
};

}  // namespace booksum

#endif  // BOOKSUM_HTTP_URL_H_
