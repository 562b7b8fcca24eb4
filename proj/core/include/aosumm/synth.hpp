#pragma once

// Deterministic synthetic aspect corpus with known per-sentence aspect
// labels, simulated multi-annotator gold and per-aspect keyword sets.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aosumm/annotations.hpp"
#include "aosumm/corpus.hpp"
#include "aosumm/embedding.hpp"
#include "aosumm/keywords.hpp"

namespace aosumm {

struct AspectSpec {
  std::string label;
  std::string prompt;
  std::vector<std::string> nouns;
  std::vector<std::string> verbs;
  std::size_t min_sentences = 2;
  std::size_t max_sentences = 3;
  /// The aspect's keyword set is the first `keyword_count` nouns.
  std::size_t keyword_count = 5;
};

struct FillerSpec {
  std::vector<std::string> nouns;
  std::vector<std::string> verbs;
  std::size_t min_sentences = 1;
  std::size_t max_sentences = 3;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t n_docs = 50;
  std::vector<AspectSpec> aspects;
  FillerSpec filler;
  /// Adds a fourth annotator per (doc, aspect) who selects one filler
  /// sentence only, so annotation filtering has something to discard.
  bool discordant_annotator = false;
};

/// Earthquake-domain aspects ("geo", "recv") whose leading nouns are the
/// default_aspect_keywords() lists.
std::vector<AspectSpec> default_aspects();
FillerSpec default_filler();
SynthConfig default_synth_config(std::uint64_t seed = 1, std::size_t n_docs = 50);

inline constexpr std::string_view kFillerLabel = "filler";

struct SyntheticData {
  Corpus corpus;
  /// doc_id -> aspect label (or "filler") of each sentence.
  std::map<std::string, std::vector<std::string>> sentence_labels;
  std::vector<KeywordSet> aspect_keywords;
  /// Three annotators per (doc, aspect); the third drops one sentence.
  std::vector<AnnotationRecord> annotations;
};

/// Sentences follow the frame "The <noun> <verb> near <noun>." with all
/// slot words from one pool; each document interleaves aspect and filler
/// sentences in a seeded order and carries a reference of one sentence per
/// aspect. Throws std::invalid_argument for fewer than two aspects, empty
/// pools, bad sentence ranges, or a token shared by two pools.
SyntheticData generate_synthetic(const SynthConfig& config);

/// Word vectors clustering each pool around its own random direction; slot
/// words of one aspect are mutually similar and dissimilar to other pools.
EmbeddingTable synthetic_embeddings(const SynthConfig& config, std::size_t dimension = 16);

/// The frame words every synthetic sentence shares.
const std::vector<std::string>& synthetic_frame_words();

}  // namespace aosumm
