#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aosumm/corpus.hpp"
#include "aosumm/oracle.hpp"

namespace aosumm {

/// For each keyword in order, selects the first not-yet-selected sentence
/// containing it as a token; stops at m. Under-filled selections are padded
/// with the earliest unselected sentences. Result is in document order.
/// Throws std::invalid_argument for empty keywords or m == 0.
std::vector<std::size_t> keyword_match_baseline(const Document& doc,
                                                std::span<const std::string> keywords,
                                                std::size_t m);

/// {0, ..., min(m, n) - 1}.
std::vector<std::size_t> lead_baseline(const Document& doc, std::size_t m);

/// Greedy oracle against the unmodified reference. Throws
/// std::invalid_argument when the reference is missing or tokenizes to nothing.
std::vector<std::size_t> std_ref_oracle(const Document& doc, const SimilarityScorer& scorer,
                                        std::size_t budget);

}  // namespace aosumm
