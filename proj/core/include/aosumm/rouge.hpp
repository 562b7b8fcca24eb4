#pragma once

// ROUGE F-measures over token sequences, reported on a 0-100 scale.
// No stemming or stopword removal is applied.

#include <cstddef>
#include <span>
#include <string>

namespace aosumm {

/// Clipped n-gram overlap F1 x 100. Zero when either side has no n-grams.
/// Throws std::invalid_argument for n == 0.
double rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
               std::size_t n);

/// Longest-common-subsequence F1 x 100. Zero when either side is empty.
double rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace aosumm
