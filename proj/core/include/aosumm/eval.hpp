#pragma once

// Evaluation against multi-annotator sentence selections: annotation
// filtering, per-annotator averaged F1 and its achievable maximum, ROUGE
// against annotator extracts, and run-to-run sensitivity statistics.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aosumm/annotations.hpp"
#include "aosumm/corpus.hpp"

namespace aosumm {

using IndexSet = std::vector<std::size_t>;
/// doc_id -> selected sentence indices.
using Predictions = std::map<std::string, IndexSet>;

struct AnnotationSet {
  std::string doc_id;
  std::string aspect;
  std::vector<AnnotationRecord> records;
  std::size_t discarded = 0;

  /// Number of rated sentences (common ratings length).
  std::size_t sentence_count() const;
  std::vector<IndexSet> selections() const;
};

/// Drops every record whose selected set shares no sentence with any other
/// record's selected set; a lone record is kept. Returns nullopt when every
/// record is dropped. Throws DataError when the records disagree on doc_id,
/// aspect or ratings length, std::invalid_argument when `records` is empty.
std::optional<AnnotationSet> filter_annotations(std::span<const AnnotationRecord> records);

struct ExcludedDocument {
  std::string aspect;
  std::string doc_id;
  std::size_t annotators = 0;
};

struct FilteredAnnotations {
  /// In order of first appearance of each (aspect, doc_id).
  std::vector<AnnotationSet> sets;
  std::size_t discarded_annotators = 0;
  /// Documents whose records were all discarded.
  std::vector<ExcludedDocument> excluded;
};

/// Groups records by (aspect, doc_id) and filters each group.
FilteredAnnotations group_and_filter(std::span<const AnnotationRecord> records);

/// 2|p ∩ s| / (|p| + |s|) x 100; both empty gives 100.
double set_f1(std::span<const std::size_t> pred, std::span<const std::size_t> selected);

/// Mean over annotators of set_f1(pred, selected_a), in [0, 100]. Throws
/// std::invalid_argument for an index outside the rated sentences.
double f1_soft(std::span<const std::size_t> pred, const AnnotationSet& ann);

inline constexpr std::size_t kMaxEnumerationSentences = 20;

/// Best f1_soft over every index subset of size <= m, by enumeration.
/// Throws std::invalid_argument when n_sentences exceeds
/// kMaxEnumerationSentences.
double max_f1(const AnnotationSet& ann, std::size_t m, std::size_t n_sentences);

/// |a ∩ b| / |a ∪ b|; both empty gives 1.
double jaccard(std::span<const std::size_t> a, std::span<const std::size_t> b);

struct SensitivityReport {
  double mean_jaccard = 0.0;
  double exact_match_pct = 0.0;
  std::size_t docs = 0;
};

/// Throws std::invalid_argument when the two runs cover different documents.
SensitivityReport sensitivity_report(const Predictions& a, const Predictions& b);

/// For every distinct selected (doc, sentence), the number of annotators who
/// selected it; returned as percentages for agreement levels 1..A (index 0 is
/// level 1), A being the largest annotator count of any set.
std::vector<double> agreement_histogram(std::span<const AnnotationSet> sets);

struct AspectScores {
  double f1 = 0.0;
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rouge_l = 0.0;
  double max_f1 = 0.0;
  std::size_t docs = 0;
  /// Predicted documents without usable annotations for this aspect.
  std::size_t skipped_docs = 0;
  std::size_t discarded_annotators = 0;
  std::size_t excluded_docs = 0;
};

struct EvalReport {
  std::size_t m = 0;
  /// Keyed by aspect label; unlabeled annotations report under "".
  std::map<std::string, AspectScores> aspects;
};

/// Macro-averages f1_soft, ROUGE-1/2/L (each annotator's selected sentences in
/// document order form one reference; per-document scores average over
/// annotators) and max_f1 over predicted documents. With `aspect` set, only
/// annotations with that label are used.
EvalReport evaluate(const Predictions& predictions, std::span<const AnnotationRecord> records,
                    const Corpus& corpus, std::size_t m,
                    const std::optional<std::string>& aspect = std::nullopt);

/// JSONL {"doc_id", "indices": [..], ...}; other fields are ignored.
Predictions parse_predictions(std::istream& in);
Predictions load_predictions(const std::filesystem::path& path);

}  // namespace aosumm
