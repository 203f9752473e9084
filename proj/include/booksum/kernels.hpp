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

#ifndef BOOKSUM_KERNELS_H_
#define BOOKSUM_KERNELS_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace booksum {
namespace kernels {

// Dense float kernels behind the embedding math (dot products for cosine
// similarity, accumulate/scale for centroids and normalization). The scalar
// kernels are the reference semantics; SIMD backends are selected at runtime
// and equivalence-tested against them. Elementwise kernels (add, scale) are
// bit-exact across backends; dot reassociates the reduction and may differ
// by a few ulps.
struct Ops {
  const char* name;
  float (*dot_f32)(const float* a, const float* b, std::size_t n);
  void (*add_f32)(float* acc, const float* x, std::size_t n);   // acc += x
  void (*scale_f32)(float* x, float s, std::size_t n);          // x *= s
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not compiled in or CPU lacks AVX2+FMA
const Ops* neon_ops();  // nullptr off aarch64

// Backends usable on this machine, scalar first.
std::vector<const Ops*> available_ops();

// Currently active backend. First use honors the BOOKSUM_KERNELS
// environment variable ("scalar", "avx2", "neon", "auto"); defaults to the
// widest available. Call set_active before spinning up workers.
const Ops& active_ops();
bool set_active(std::string_view name);

float dot(const float* a, const float* b, std::size_t n);
void add(float* acc, const float* x, std::size_t n);
void scale(float* x, float s, std::size_t n);
float l2_norm(const float* x, std::size_t n);

}  // namespace kernels
}  // namespace booksum

#endif  // BOOKSUM_KERNELS_H_
