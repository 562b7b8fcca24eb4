#pragma once

// Extractive oracle labels: greedy sentence selection maximizing a
// similarity scorer against a reference, optionally augmented with repeated
// keywords, and the (mixed) training set built from them.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aosumm/corpus.hpp"
#include "aosumm/embedding.hpp"
#include "aosumm/keywords.hpp"

namespace aosumm {

struct SelectionVector {
  std::vector<bool> bits;
  std::size_t budget = 0;

  std::size_t count() const;
  std::vector<std::size_t> indices() const;

  bool operator==(const SelectionVector&) const = default;
};

/// Scores a candidate token sequence against a target, in [0, 1].
class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;
  virtual double score(std::span<const std::string> candidate,
                       std::span<const std::string> target) const = 0;
  virtual std::string_view name() const = 0;
};

/// Bigram-overlap F1 (clipped counts) in [0, 1]; 0 if either side is empty.
double score_rouge2(std::span<const std::string> candidate, std::span<const std::string> target);

/// Greedy token matching: precision is the mean over candidate tokens of the
/// best similarity to any target token (floored at 0), recall the reverse;
/// the result is their harmonic mean. A null table means exact matching only.
double score_embed(std::span<const std::string> candidate, std::span<const std::string> target,
                   const EmbeddingTable* table);

class Rouge2Scorer final : public SimilarityScorer {
 public:
  double score(std::span<const std::string> candidate,
               std::span<const std::string> target) const override {
    return score_rouge2(candidate, target);
  }
  std::string_view name() const override { return "rouge2"; }
};

class EmbedScorer final : public SimilarityScorer {
 public:
  explicit EmbedScorer(const EmbeddingTable* table = nullptr) : table_(table) {}
  double score(std::span<const std::string> candidate,
               std::span<const std::string> target) const override {
    return score_embed(candidate, target, table_);
  }
  std::string_view name() const override { return "embed"; }

 private:
  const EmbeddingTable* table_;
};

enum class ScorerKind { rouge2, embed };

ScorerKind parse_scorer_kind(std::string_view name);
std::string_view to_string(ScorerKind kind);
std::unique_ptr<SimilarityScorer> make_scorer(ScorerKind kind, const EmbeddingTable* table);

/// n = round_half_up(r * summary_tokens / num_keywords), at least 1.
/// Throws std::invalid_argument when num_keywords == 0 or r is not positive.
std::size_t keyword_repeat_count(std::size_t summary_tokens, std::size_t num_keywords, double r);

/// summary_tokens followed by each keyword repeated n times, grouped by
/// keyword in set order.
Tokens augment_reference(std::span<const std::string> summary_tokens,
                         std::span<const std::string> keywords, double r);

/// Tokens of the selected sentences concatenated in document order.
Tokens selected_tokens(const Document& doc, std::span<const std::size_t> indices);

struct OracleResult {
  SelectionVector labels;
  double score = 0.0;
  /// Scorer value after each accepted addition; strictly increasing.
  std::vector<double> trajectory;
};

/// Repeatedly adds the sentence that maximizes the scorer on the selection
/// (tokens in document order) until the budget is reached or no sentence
/// strictly improves the score. Ties go to the lower sentence index.
OracleResult greedy_oracle(const Document& doc, std::span<const std::string> target,
                           const SimilarityScorer& scorer, std::size_t budget);

struct TrainingExample {
  std::string doc_id;
  std::vector<std::string> keywords;
  SelectionVector labels;

  bool operator==(const TrainingExample&) const = default;
};

struct TrainingConfig {
  double r = 1.0;
  ScorerKind scorer = ScorerKind::embed;
  bool mixed = true;
  std::size_t budget = 3;
  std::size_t max_k = 5;
};

struct TrainingSet {
  std::vector<TrainingExample> examples;
  std::size_t skipped_no_reference = 0;
  /// Documents whose reference shared no content token with the body; they
  /// contribute only the keywordless example (when mixed).
  std::size_t empty_keyword_docs = 0;
};

/// One keyword-augmented example per document, plus a keywordless example
/// with the unmodified oracle when `mixed`. Output follows corpus order.
TrainingSet build_training_set(const Corpus& corpus, const TrainingConfig& config,
                               const EmbeddingTable* table = nullptr);

/// Fraction of (doc, sentence) label positions that differ between two
/// training sets built over the same corpus, matching examples pairwise by
/// position. Throws std::invalid_argument when the sets are not aligned.
double label_difference_rate(std::span<const TrainingExample> a,
                             std::span<const TrainingExample> b);

/// JSONL {"doc_id", "keywords", "labels": [0/1], "budget"}; "budget" is
/// optional on input and defaults to the number of positive labels.
void write_training_set(std::ostream& out, std::span<const TrainingExample> examples);
std::vector<TrainingExample> parse_training_set(std::istream& in);
std::vector<TrainingExample> load_training_set(const std::filesystem::path& path);

}  // namespace aosumm
