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

#include "booksum/rouge.hpp"

#include <doctest.h>

#include <cmath>

#include "booksum/error.hpp"
#include "support/test_support.hpp"

using namespace booksum;

namespace {

const char* kCand = "the cat sat";
const char* kRef = "the cat was sat on the mat";

std::string random_text(booksum_test::Rng& rng, bool allow_empty) {
  const char alphabet[] = {'a', 'b', 'c', 'd', 'e'};
  std::size_t words = rng.between(allow_empty ? 0 : 1, 12);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (!out.empty()) out += ' ';
    out += alphabet[rng.below(5)];
  }
  return out;
}

}  // namespace

TEST_CASE("metric_tokenize lowercases and drops punctuation") {
  CHECK(metric_tokenize("The cat.") == std::vector<std::string>{"the", "cat"});
  CHECK(metric_tokenize("").empty());
  CHECK(metric_tokenize("It's fine") ==
        std::vector<std::string>{"it", "s", "fine"});
}

TEST_CASE("ngrams slide a window with multiplicity") {
  CHECK(ngrams({"a"}, 2).counts.empty());
  CHECK(ngrams({"a"}, 2).total == 0);

  NGramCounts unigrams = ngrams({"a", "b", "a"}, 1);
  CHECK(unigrams.total == 3);
  CHECK(unigrams.counts.size() == 2);

  NGramCounts bigrams = ngrams({"a", "b", "a", "b"}, 2);
  CHECK(bigrams.total == 3);
  CHECK(bigrams.counts.at("1:a1:b") == 2);
  CHECK(bigrams.counts.at("1:b1:a") == 1);
  CHECK_THROWS_AS(ngrams({"a"}, 0), Error);
}

TEST_CASE("rouge_n worked example") {
  RougeScore r1 = rouge_n(kCand, kRef, 1);
  CHECK(r1.precision == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r1.recall == doctest::Approx(3.0 / 7.0).epsilon(1e-9));
  CHECK(r1.f1 == doctest::Approx(0.6).epsilon(1e-9));

  RougeScore r2 = rouge_n(kCand, kRef, 2);
  CHECK(r2.precision == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r2.recall == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(r2.f1 == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("rouge_n identity and disjoint cases") {
  RougeScore same = rouge_n("a b c", "a b c", 1);
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f1 == 1.0);

  RougeScore none = rouge_n("x y", "a b", 1);
  CHECK(none.precision == 0.0);
  CHECK(none.recall == 0.0);
  CHECK(none.f1 == 0.0);

  // empty candidate: zero denominator scores 0, never NaN
  RougeScore empty = rouge_n("", "a b", 1);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
}

TEST_CASE("lcs_length basics") {
  std::vector<std::string> x = {"p", "q", "r"};
  CHECK(lcs_length(x, x) == 3);
  CHECK(lcs_length(x, {}) == 0);
  CHECK(lcs_length({}, x) == 0);
  CHECK(lcs_length({"a", "c", "e"}, {"a", "b", "c", "d", "e"}) == 3);
}

TEST_CASE("monotone lcs: appending a shared token adds exactly one") {
  booksum_test::Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> a, b;
    for (std::size_t i = rng.below(8); i > 0; --i) {
      a.push_back(std::string(1, static_cast<char>('a' + rng.below(4))));
    }
    for (std::size_t i = rng.below(8); i > 0; --i) {
      b.push_back(std::string(1, static_cast<char>('a' + rng.below(4))));
    }
    std::size_t before = lcs_length(a, b);
    a.push_back("zz");
    b.push_back("zz");
    CHECK(lcs_length(a, b) == before + 1);
  }
}

TEST_CASE("rouge_l worked example") {
  RougeScore rl = rouge_l(kCand, kRef);
  CHECK(rl.precision == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rl.recall == doctest::Approx(3.0 / 7.0).epsilon(1e-9));
  CHECK(rl.f1 == doctest::Approx(0.6).epsilon(1e-9));

  CHECK(rouge_l("a", "b").f1 == 0.0);
  CHECK(rouge_l("same words here", "same words here").f1 == 1.0);
}

TEST_CASE("evaluate_summary composes all three variants") {
  RougeReport report = evaluate_summary(kCand, kRef);
  CHECK(report.rouge1.precision == doctest::Approx(1.0));
  CHECK(report.rouge2.f1 == doctest::Approx(0.25));
  CHECK(report.rougeL.recall == doctest::Approx(3.0 / 7.0));

  RougeReport same = evaluate_summary("a b", "a b");
  CHECK(same.rouge1.f1 == 1.0);
  CHECK(same.rouge2.f1 == 1.0);
  CHECK(same.rougeL.f1 == 1.0);

  try {
    evaluate_summary("...", "a b");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyInput);
  }
}

TEST_CASE("swap symmetry and bounds on random pairs") {
  booksum_test::Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    std::string a = random_text(rng, false);
    std::string b = random_text(rng, false);
    for (std::size_t n = 1; n <= 3; ++n) {
      RougeScore ab = rouge_n(a, b, n);
      RougeScore ba = rouge_n(b, a, n);
      CHECK(ab.precision == ba.recall);  // exact
      CHECK(ab.recall == ba.precision);
      for (double v : {ab.precision, ab.recall, ab.f1}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
    RougeScore lab = rouge_l(a, b);
    RougeScore lba = rouge_l(b, a);
    CHECK(lab.precision == lba.recall);
    CHECK(lab.recall == lba.precision);
  }
}

TEST_CASE("implementation matches the brute-force oracles") {
  booksum_test::Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    std::string a = random_text(rng, true);
    std::string b = random_text(rng, true);
    std::vector<std::string> ta = metric_tokenize(a);
    std::vector<std::string> tb = metric_tokenize(b);
    for (std::size_t n = 1; n <= 3; ++n) {
      RougeScore got = rouge_n(a, b, n);
      booksum_test::OracleRouge want =
          booksum_test::brute_force_rouge_n(ta, tb, n);
      CHECK(got.precision == want.precision);
      CHECK(got.recall == want.recall);
      CHECK(got.f1 == want.f1);
    }
    CHECK(lcs_length(ta, tb) == booksum_test::oracle_lcs(ta, tb));
  }
}

TEST_CASE("report table has the three metric rows") {
  RougeReport report = evaluate_summary(kCand, kRef);
  std::string table = rouge_report_table(report);
  CHECK(table.find("ROUGE-1") != std::string::npos);
  CHECK(table.find("ROUGE-2") != std::string::npos);
  CHECK(table.find("ROUGE-L") != std::string::npos);
  CHECK(table.find("Precision") != std::string::npos);
  CHECK(table.find("Recall") != std::string::npos);
  CHECK(table.find("F-Score") != std::string::npos);
  CHECK(table.find("0.428571") != std::string::npos);
}
