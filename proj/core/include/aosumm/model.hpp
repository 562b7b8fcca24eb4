#pragma once

// Keyword-conditioned extractive sentence scorer. Each sentence becomes a
// fixed feature vector conditioned on (document, keywords), and a logistic
// model trained on oracle labels turns features into selection scores.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aosumm/corpus.hpp"
#include "aosumm/embedding.hpp"
#include "aosumm/keywords.hpp"
#include "aosumm/oracle.hpp"

namespace aosumm {

inline constexpr std::size_t kFeatureDim = 9;
using FeatureVector = std::array<double, kFeatureDim>;
using Weights = std::array<double, kFeatureDim>;

enum Feature : std::size_t {
  kBias = 0,
  kPosition,
  kKeywordMatch,
  kKeywordMaxSimilarity,
  kKeywordMeanSimilarity,
  kSalience,
  kCentroidCosine,
  kLogLength,
  kHasKeywords,
};

const std::array<std::string_view, kFeatureDim>& feature_names();

/// Per-document caches (tf, tf-idf centroid) reused across its sentences.
class DocumentFeaturizer {
 public:
  /// `keywords` and `table` are borrowed for the featurizer's lifetime;
  /// `table` may be null (exact keyword matching only).
  DocumentFeaturizer(const Document& doc, std::span<const std::string> keywords,
                     const IdfTable& idf, const EmbeddingTable* table);

  /// Throws std::out_of_range for an invalid sentence index.
  FeatureVector featurize(std::size_t i) const;
  std::size_t size() const { return doc_->size(); }

 private:
  const Document* doc_;
  std::span<const std::string> keywords_;
  const IdfTable* idf_;
  const EmbeddingTable* table_;
  std::unordered_map<std::string_view, std::size_t> doc_tf_;
  double centroid_norm_ = 0.0;
  double max_salience_ = 0.0;
};

/// Features of sentence `i`. Empty keywords zero the three keyword features
/// and the has-keywords flag.
FeatureVector featurize(const Document& doc, std::span<const std::string> keywords,
                        const IdfTable& idf, const EmbeddingTable* table, std::size_t i);

struct Hyperparameters {
  double learning_rate = 0.1;
  std::size_t epochs = 300;
  double l2 = 1e-4;
  std::uint64_t seed = 13;
};

/// Raised when training produces a non-finite loss.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScorerModel {
  Weights weights{};
  Hyperparameters hyper;
  double final_loss = 0.0;
  /// Loss at the initial weights followed by the loss after every epoch.
  std::vector<double> loss_history;

  double logit(const FeatureVector& x) const;
  double probability(const FeatureVector& x) const;
};

struct Dataset {
  std::vector<FeatureVector> features;
  std::vector<double> labels;

  std::size_t size() const { return labels.size(); }
};

/// Featurizes every sentence of every example. Throws DataError when an
/// example's doc_id is unknown or its label count differs from the document.
Dataset assemble_dataset(std::span<const TrainingExample> examples, const Corpus& corpus,
                         const IdfTable& idf, const EmbeddingTable* table);

/// Mean binary cross-entropy plus l2 / 2 * |w|^2 with the bias excluded.
double objective(const Dataset& data, const Weights& w, double l2);
Weights objective_gradient(const Dataset& data, const Weights& w, double l2);

/// Full-batch gradient descent from zero weights.
ScorerModel train(const Dataset& data, const Hyperparameters& hyper);
ScorerModel train(std::span<const TrainingExample> examples, const Corpus& corpus,
                  const IdfTable& idf, const EmbeddingTable* table, const Hyperparameters& hyper);

/// Indices of the `m` highest-scoring sentences (ties: lower index), in
/// document order. Throws std::invalid_argument for m == 0 or an empty doc.
std::vector<std::size_t> predict(const ScorerModel& model, const Document& doc,
                                 std::span<const std::string> keywords, const IdfTable& idf,
                                 const EmbeddingTable* table, std::size_t m);

/// Top-m selection over precomputed scores, shared by every predictor.
std::vector<std::size_t> select_top(std::span<const double> scores, std::size_t m);

/// Newline-joined text of the given sentences in document order.
std::string join_sentences(const Document& doc, std::span<const std::size_t> indices);

std::string summarize_text(const ScorerModel& model, const Document& doc,
                           std::span<const std::string> keywords, const IdfTable& idf,
                           const EmbeddingTable* table, std::size_t m);

/// {"weights", "feature_names", "hyper", "seed", "final_loss"}.
void write_model(std::ostream& out, const ScorerModel& model);
ScorerModel parse_model(std::istream& in);
ScorerModel load_model(const std::filesystem::path& path);

}  // namespace aosumm
