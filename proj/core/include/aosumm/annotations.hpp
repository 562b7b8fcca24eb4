#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace aosumm {

/// One annotator's 0-3 ratings of every sentence of a (truncated) article.
/// `aspect` is empty for single-aspect annotation files.
struct AnnotationRecord {
  std::string doc_id;
  std::string annotator_id;
  std::string aspect;
  std::vector<int> ratings;

  /// Sentence indices rated at least 1, ascending.
  std::vector<std::size_t> selected() const;

  bool operator==(const AnnotationRecord&) const = default;
};

/// JSONL: {"doc_id", "annotator", "ratings": [int], "aspect"?}.
/// Ratings outside 0..3 raise DataError naming the line.
std::vector<AnnotationRecord> parse_annotations(std::istream& in);
std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path);
void write_annotations(std::ostream& out, const std::vector<AnnotationRecord>& records);

}  // namespace aosumm
