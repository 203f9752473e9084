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

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace booksum {
namespace kernels {
namespace {

float scalar_dot(const float* a, const float* b, std::size_t n) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scalar_add(float* acc, const float* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void scalar_scale(float* x, float s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

const Ops kScalarOps = {"scalar", scalar_dot, scalar_add, scalar_scale};

const Ops* pick_default() {
  if (const Ops* ops = avx2_ops()) return ops;
  if (const Ops* ops = neon_ops()) return ops;
  return &kScalarOps;
}

const Ops* pick_named(std::string_view name) {
  if (name == "scalar") return &kScalarOps;
  if (name == "avx2") return avx2_ops();
  if (name == "neon") return neon_ops();
  if (name == "auto") return pick_default();
  return nullptr;
}

std::atomic<const Ops*>& active_slot() {
  static std::atomic<const Ops*> slot{nullptr};
  return slot;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

std::vector<const Ops*> available_ops() {
  std::vector<const Ops*> out{&kScalarOps};
  if (const Ops* ops = avx2_ops()) out.push_back(ops);
  if (const Ops* ops = neon_ops()) out.push_back(ops);
  return out;
}

const Ops& active_ops() {
  const Ops* ops = active_slot().load(std::memory_order_acquire);
  if (ops == nullptr) {
    const char* env = std::getenv("BOOKSUM_KERNELS");
    ops = env != nullptr ? pick_named(env) : nullptr;
    if (ops == nullptr) ops = pick_default();
    active_slot().store(ops, std::memory_order_release);
  }
  return *ops;
}

bool set_active(std::string_view name) {
  const Ops* ops = pick_named(name);
  if (ops == nullptr) return false;
  active_slot().store(ops, std::memory_order_release);
  return true;
}

float dot(const float* a, const float* b, std::size_t n) {
  return active_ops().dot_f32(a, b, n);
}

void add(float* acc, const float* x, std::size_t n) {
  active_ops().add_f32(acc, x, n);
}

void scale(float* x, float s, std::size_t n) {
  active_ops().scale_f32(x, s, n);
}

float l2_norm(const float* x, std::size_t n) {
  return std::sqrt(dot(x, x, n));
}

}  // namespace kernels
}  // namespace booksum
