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

#include <doctest.h>

#include <cmath>

#include "support/test_support.hpp"

using namespace booksum::kernels;

namespace {

std::vector<float> random_vec(booksum_test::Rng& rng, std::size_t n) {
  std::vector<float> v(n);
  for (float& x : v) {
    x = static_cast<float>(rng.unit() * 4.0 - 2.0);
  }
  return v;
}

}  // namespace

TEST_CASE("scalar backend is always available and selectable") {
  auto backends = available_ops();
  REQUIRE_FALSE(backends.empty());
  CHECK(std::string(backends[0]->name) == "scalar");
  CHECK(set_active("scalar"));
  CHECK(std::string(active_ops().name) == "scalar");
  CHECK_FALSE(set_active("no-such-backend"));
  CHECK(std::string(active_ops().name) == "scalar");  // unchanged
  CHECK(set_active("auto"));
}

// Every SIMD backend must agree with the scalar reference: elementwise
// kernels bit-exactly, dot within a reassociation tolerance.
TEST_CASE("simd backends are equivalent to the scalar reference") {
  booksum_test::Rng rng(41);
  const std::size_t sizes[] = {0, 1, 2, 3, 7, 8, 9, 15, 16,
                               17, 31, 33, 64, 100, 255, 256, 1000};
  for (const Ops* backend : available_ops()) {
    if (std::string(backend->name) == "scalar") continue;
    INFO("backend ", backend->name);
    for (std::size_t n : sizes) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<float> a = random_vec(rng, n);
        std::vector<float> b = random_vec(rng, n);

        double reference = scalar_ops().dot_f32(a.data(), b.data(), n);
        double candidate = backend->dot_f32(a.data(), b.data(), n);
        double scale_bound = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          scale_bound += std::abs(double(a[i]) * double(b[i]));
        }
        CHECK(std::abs(candidate - reference) <=
              1e-5 * std::max(1.0, scale_bound));

        std::vector<float> acc1 = a, acc2 = a;
        scalar_ops().add_f32(acc1.data(), b.data(), n);
        backend->add_f32(acc2.data(), b.data(), n);
        CHECK(acc1 == acc2);  // elementwise: bit-exact

        std::vector<float> s1 = a, s2 = a;
        scalar_ops().scale_f32(s1.data(), 1.7f, n);
        backend->scale_f32(s2.data(), 1.7f, n);
        CHECK(s1 == s2);
      }
    }
  }
}

TEST_CASE("dot basics hold on the active backend") {
  booksum_test::Rng rng(43);
  std::vector<float> a = random_vec(rng, 133);
  std::vector<float> b = random_vec(rng, 133);
  CHECK(dot(a.data(), b.data(), a.size()) ==
        dot(b.data(), a.data(), a.size()));
  CHECK(dot(a.data(), a.data(), a.size()) >= 0.0f);

  std::vector<float> e0(32, 0.0f);
  e0[0] = 1.0f;
  CHECK(l2_norm(e0.data(), e0.size()) == doctest::Approx(1.0).epsilon(1e-7));
}
