#pragma once

// Documents, sentences and the JSONL corpus format shared by every stage of
// the pipeline.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aosumm {

using Tokens = std::vector<std::string>;

/// Raised for malformed or inconsistent input data (bad JSON lines,
/// duplicate ids, out-of-range ratings, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  Tokens tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<std::string> reference;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  std::string provenance;

  /// nullptr when no document carries `id`.
  const Document* find(std::string_view id) const;
  std::size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }
};

/// Lowercases ASCII letters and splits on every non-alphanumeric byte.
/// Bytes outside ASCII are treated as separators.
Tokens tokenize(std::string_view text);

/// Rule-based splitter: breaks after `.`, `!` or `?` (optionally followed by
/// closing quotes or brackets) when whitespace and then an uppercase letter or
/// the end of text follow. A period ending one of Mr, Mrs, Dr, St, U.S, a.m,
/// p.m, No, vs never ends a sentence. Pieces are whitespace-trimmed.
std::vector<std::string> split_sentences(std::string_view text);

Document make_document(std::string id, const std::vector<std::string>& sentences,
                       std::optional<std::string> reference = std::nullopt);

/// Keeps the first `max_sentences` sentences. Throws std::invalid_argument for
/// max_sentences == 0.
Document truncate(const Document& doc, std::size_t max_sentences);

/// Joins documents in order and renumbers sentences. The reference is the
/// newline-join of the inputs' references, or absent when none has one.
Document concat_documents(std::span<const Document> docs, std::string new_id);

Corpus parse_corpus(std::istream& in, std::string provenance = {});
Corpus load_corpus(const std::filesystem::path& path);

/// Writes one {"id","sentences","summary"?} object per line.
void write_corpus(std::ostream& out, const Corpus& corpus);
void save_corpus(const std::filesystem::path& path, const Corpus& corpus);

}  // namespace aosumm
