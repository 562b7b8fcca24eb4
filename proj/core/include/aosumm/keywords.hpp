#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aosumm/corpus.hpp"

namespace aosumm {

/// Inverse document frequencies over a corpus: idf(t) = ln(N / df(t)).
/// Tokens never seen are looked up as df = 1, i.e. the maximum idf ln(N).
class IdfTable {
 public:
  IdfTable() = default;

  /// Throws std::invalid_argument on an empty corpus.
  static IdfTable build(const Corpus& corpus);

  double idf(std::string_view token) const;
  std::size_t df(std::string_view token) const;
  std::size_t doc_count() const { return doc_count_; }
  bool contains(std::string_view token) const;

  /// Sorted token -> df view; used to assign stable vocabulary indices.
  const std::map<std::string, std::size_t, std::less<>>& document_frequencies() const {
    return df_;
  }

 private:
  std::map<std::string, std::size_t, std::less<>> df_;
  std::size_t doc_count_ = 0;
};

struct KeywordSet {
  std::string aspect_label;
  std::string prompt;
  std::vector<std::string> keywords;

  bool empty() const { return keywords.empty(); }
  std::size_t size() const { return keywords.size(); }
  bool contains(std::string_view token) const;
};

/// Normalizes raw keyword strings: each is tokenized, pieces are appended in
/// order and duplicates dropped after their first occurrence.
std::vector<std::string> normalize_keywords(const std::vector<std::string>& raw);

bool is_stopword(std::string_view token);

/// Ranks document tokens by raw count x idf (ties: earlier first occurrence),
/// drops stopwords, zero scores and tokens absent from the tokenized reference,
/// and keeps the first `max_k`. An empty result means the reference shares no
/// content token with the document. Throws std::invalid_argument when the
/// document has no reference or max_k == 0.
KeywordSet extract_keywords(const Document& doc, const IdfTable& idf, std::size_t max_k = 5);

/// JSON array of {"aspect", "prompt"?, "keywords": [..]}. An aspect whose
/// keyword list normalizes to nothing raises DataError.
std::vector<KeywordSet> parse_aspect_keywords(std::istream& in);
std::vector<KeywordSet> load_aspect_keywords(const std::filesystem::path& path);
void write_aspect_keywords(std::ostream& out, const std::vector<KeywordSet>& sets);

/// The Earthquake/Fraud aspect prompts and keyword lists shipped as defaults.
std::vector<KeywordSet> default_aspect_keywords();

}  // namespace aosumm
