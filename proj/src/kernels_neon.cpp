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

#include "booksum/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace booksum {
namespace kernels {
namespace {

float neon_dot(const float* a, const float* b, std::size_t n) {
  float32x4_t acc = vdupq_n_f32(0.0f);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = vfmaq_f32(acc, vld1q_f32(a + i), vld1q_f32(b + i));
  }
  float total = vaddvq_f32(acc);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void neon_add(float* acc, const float* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(acc + i, vaddq_f32(vld1q_f32(acc + i), vld1q_f32(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void neon_scale(float* x, float s, std::size_t n) {
  const float32x4_t factor = vdupq_n_f32(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(x + i, vmulq_f32(vld1q_f32(x + i), factor));
  }
  for (; i < n; ++i) x[i] *= s;
}

const Ops kNeonOps = {"neon", neon_dot, neon_add, neon_scale};

}  // namespace

// NEON is architecturally guaranteed on aarch64.
const Ops* neon_ops() { return &kNeonOps; }

}  // namespace kernels
}  // namespace booksum

#else  // !__aarch64__

namespace booksum {
namespace kernels {

const Ops* neon_ops() { return nullptr; }

}  // namespace kernels
}  // namespace booksum

#endif  // __aarch64__
