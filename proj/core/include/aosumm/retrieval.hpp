#pragma once

// Exemplar-based domain retrieval: a document's similarity to an exemplar
// sentence is the mean cosine between each of its sentences and the
// exemplar under a sentence encoder.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aosumm/corpus.hpp"
#include "aosumm/embedding.hpp"
#include "aosumm/keywords.hpp"

namespace aosumm {

/// Maps text to a dense vector of fixed dimension. Implementations must be
/// deterministic and safe for concurrent const use.
class SentenceEncoder {
 public:
  virtual ~SentenceEncoder() = default;
  virtual std::size_t dimension() const = 0;
  virtual std::vector<double> encode(std::string_view text) const = 0;
};

/// L2-normalized tf-idf bag of words over the vocabulary of an IdfTable.
/// Tokens outside that vocabulary are ignored.
class TfidfEncoder final : public SentenceEncoder {
 public:
  explicit TfidfEncoder(const IdfTable& idf);

  std::size_t dimension() const override { return index_.size(); }
  std::vector<double> encode(std::string_view text) const override;

 private:
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<double> weights_;
};

/// Mean of the (unit) word vectors of in-vocabulary tokens.
class WordVectorEncoder final : public SentenceEncoder {
 public:
  explicit WordVectorEncoder(const EmbeddingTable& table) : table_(&table) {}

  std::size_t dimension() const override { return table_->dimension(); }
  std::vector<double> encode(std::string_view text) const override;

 private:
  const EmbeddingTable* table_;
};

struct ExemplarQuery {
  std::string text;
  std::string domain_label;
};

inline constexpr std::string_view kEarthquakeExemplar = "An earthquake occurred.";
// The misspelling is intentional; it is the canonical exemplar string.
inline constexpr std::string_view kFraudExemplar = "A fraud occured.";

/// Cosine similarity. Throws std::invalid_argument on a dimension mismatch.
/// Returns 0 when either vector is all zeros.
double cosine(std::span<const double> u, std::span<const double> v);

bool is_zero_vector(std::span<const double> v);

struct DocScore {
  std::string id;
  double score = 0.0;
  /// Sentence/exemplar pairs whose cosine was undefined and counted as 0.
  std::size_t zero_vector_pairs = 0;
};

/// Mean over sentences of cosine(encode(sentence), encode(exemplar)).
/// Throws std::invalid_argument on an empty document or empty exemplar.
DocScore doc_similarity(const Document& doc, const ExemplarQuery& exemplar,
                        const SentenceEncoder& encoder);

/// Scores every document and keeps the best `k`, ordered by descending
/// score with ties broken by ascending id.
std::vector<DocScore> retrieve_top(const Corpus& corpus, const ExemplarQuery& exemplar,
                                   std::size_t k, const SentenceEncoder& encoder);

}  // namespace aosumm
