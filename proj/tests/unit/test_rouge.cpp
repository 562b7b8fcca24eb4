#include <map>
#include <random>

#include "aosumm/corpus.hpp"
#include "aosumm/rouge.hpp"
#include "doctest.h"

using namespace aosumm;

namespace {

// Independent reference: ngram counts via std::map, then clipped overlap.
double naive_rouge_n(const Tokens& c, const Tokens& r, std::size_t n) {
  auto grams = [n](const Tokens& t) {
    std::map<std::vector<std::string>, int> m;
    for (std::size_t i = 0; i + n <= t.size(); ++i) {
      ++m[std::vector<std::string>(t.begin() + i, t.begin() + i + n)];
    }
    return m;
  };
  const auto gc = grams(c), gr = grams(r);
  int total_c = 0, total_r = 0, overlap = 0;
  for (const auto& [g, k] : gc) total_c += k;
  for (const auto& [g, k] : gr) total_r += k;
  for (const auto& [g, k] : gc) {
    auto it = gr.find(g);
    if (it != gr.end()) overlap += std::min(k, it->second);
  }
  if (total_c == 0 || total_r == 0 || overlap == 0) return 0.0;
  const double p = double(overlap) / total_c, rr = double(overlap) / total_r;
  return 200.0 * p * rr / (p + rr);
}

// Exponential LCS: longest subsequence of `a` that is a subsequence of `b`.
std::size_t brute_lcs(const Tokens& a, const Tokens& b) {
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    Tokens sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask >> i & 1u) sub.push_back(a[i]);
    }
    std::size_t j = 0;
    for (const auto& t : b) {
      if (j < sub.size() && sub[j] == t) ++j;
    }
    if (j == sub.size()) best = std::max(best, sub.size());
  }
  return best;
}

Tokens random_tokens(std::mt19937& rng, std::size_t max_len) {
  static const char* vocab[] = {"a", "b", "c", "d", "e"};
  Tokens t(rng() % (max_len + 1));
  for (auto& s : t) s = vocab[rng() % 5];
  return t;
}

}  // namespace

TEST_CASE("rouge hand examples") {
  const Tokens thecat{"the", "cat"}, thecatsat{"the", "cat", "sat"};
  CHECK(rouge_n(thecat, thecatsat, 1) == doctest::Approx(80.0).epsilon(1e-9));
  CHECK(rouge_n(Tokens{"a", "b", "c"}, Tokens{"a", "b", "d"}, 2) == doctest::Approx(50.0));
  CHECK(rouge_n(thecatsat, thecatsat, 2) == doctest::Approx(100.0));
  CHECK(rouge_l(Tokens{"a", "c"}, Tokens{"a", "b", "c"}) == doctest::Approx(80.0));
  CHECK(rouge_l(thecat, thecat) == doctest::Approx(100.0));
  CHECK(rouge_l(Tokens{"x"}, Tokens{"y"}) == 0.0);
  CHECK(rouge_n(Tokens{"a"}, Tokens{"a"}, 2) == 0.0);
  CHECK(rouge_n(Tokens{}, thecat, 1) == 0.0);
  CHECK(rouge_l(Tokens{}, thecat) == 0.0);
  CHECK_THROWS_AS(rouge_n(thecat, thecat, 0), std::invalid_argument);
}

TEST_CASE("rouge clipped counts") {
  // cand has "a" x3, ref has "a" x1: overlap clipped to 1.
  CHECK(rouge_n(Tokens{"a", "a", "a"}, Tokens{"a", "b"}, 1) ==
        doctest::Approx(200.0 * (1.0 / 3) * 0.5 / (1.0 / 3 + 0.5)));
}

TEST_CASE("rouge matches naive implementations and is symmetric") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_tokens(rng, 9), r = random_tokens(rng, 9);
    for (std::size_t n : {1u, 2u, 3u}) {
      const double got = rouge_n(c, r, n);
      CHECK(got == doctest::Approx(naive_rouge_n(c, r, n)).epsilon(1e-12));
      CHECK(got == doctest::Approx(rouge_n(r, c, n)).epsilon(1e-12));
      CHECK(got >= 0.0);
      CHECK(got <= 100.0 + 1e-9);
    }
    CHECK(lcs_length(c, r) == brute_lcs(c, r));
    CHECK(rouge_l(c, r) == doctest::Approx(rouge_l(r, c)).epsilon(1e-12));
  }
}
