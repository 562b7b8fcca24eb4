#include "aosumm/rouge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace aosumm {

namespace {

using NgramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                       tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++counts[std::move(gram)];
  }
  return counts;
}

double f_measure(double overlap, double cand_total, double ref_total) {
  if (cand_total == 0.0 || ref_total == 0.0 || overlap == 0.0) return 0.0;
  const double p = overlap / cand_total;
  const double r = overlap / ref_total;
  return 100.0 * 2.0 * p * r / (p + r);
}

}  // namespace

double rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
               std::size_t n) {
  if (n == 0) throw std::invalid_argument("rouge_n: n must be >= 1");
  if (candidate.size() < n || reference.size() < n) return 0.0;
  const auto cand = count_ngrams(candidate, n);
  const auto ref = count_ngrams(reference, n);
  std::size_t overlap = 0;
  auto c = cand.begin();
  auto r = ref.begin();
  while (c != cand.end() && r != ref.end()) {
    if (c->first < r->first) {
      ++c;
    } else if (r->first < c->first) {
      ++r;
    } else {
      overlap += std::min(c->second, r->second);
      ++c;
      ++r;
    }
  }
  return f_measure(static_cast<double>(overlap),
                   static_cast<double>(candidate.size() - n + 1),
                   static_cast<double>(reference.size() - n + 1));
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  return f_measure(static_cast<double>(lcs_length(candidate, reference)),
                   static_cast<double>(candidate.size()),
                   static_cast<double>(reference.size()));
}

}  // namespace aosumm
