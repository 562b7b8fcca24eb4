#include "aosumm/baselines.hpp"

#include <algorithm>
#include <stdexcept>

namespace aosumm {

std::vector<std::size_t> keyword_match_baseline(const Document& doc,
                                                std::span<const std::string> keywords,
                                                std::size_t m) {
  if (keywords.empty()) throw std::invalid_argument("keyword_match_baseline: no keywords");
  if (m == 0) throw std::invalid_argument("keyword_match_baseline: m must be >= 1");
  const std::size_t want = std::min(m, doc.size());
  std::vector<bool> taken(doc.size(), false);
  std::size_t count = 0;

  for (const auto& k : keywords) {
    if (count == want) break;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (taken[i]) continue;
      const auto& tokens = doc.sentences[i].tokens;
      if (std::find(tokens.begin(), tokens.end(), k) != tokens.end()) {
        taken[i] = true;
        ++count;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < doc.size() && count < want; ++i) {
    if (!taken[i]) {
      taken[i] = true;
      ++count;
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (taken[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> lead_baseline(const Document& doc, std::size_t m) {
  if (m == 0) throw std::invalid_argument("lead_baseline: m must be >= 1");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(m, doc.size()); ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> std_ref_oracle(const Document& doc, const SimilarityScorer& scorer,
                                        std::size_t budget) {
  if (!doc.reference) {
    throw std::invalid_argument("std_ref_oracle: document \"" + doc.id + "\" has no reference");
  }
  const auto target = tokenize(*doc.reference);
  if (target.empty()) {
    throw std::invalid_argument("std_ref_oracle: document \"" + doc.id +
                                "\" has an empty reference");
  }
  return greedy_oracle(doc, target, scorer, budget).labels.indices();
}

}  // namespace aosumm
