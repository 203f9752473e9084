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

#ifndef BOOKSUM_STEM_H_
#define BOOKSUM_STEM_H_

#include <string>
#include <string_view>

namespace booksum {

// Porter stemming algorithm (1980 suffix tables). Expects a lowercase word;
// tokens containing characters outside [a-z] and words shorter than three
// letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace booksum

#endif  // BOOKSUM_STEM_H_
