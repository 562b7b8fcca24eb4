#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aosumm {

/// Token -> unit-norm vector table loaded from a whitespace-separated word
/// vector file (`token v1 ... vd` per line).
///
/// Out-of-vocabulary policy: a pair involving an unknown token has similarity
/// 1 when the strings are identical and 0 otherwise.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  static EmbeddingTable parse(std::istream& in);
  static EmbeddingTable load(const std::filesystem::path& path);

  /// Stores `vector` L2-normalized. Throws std::invalid_argument on a
  /// dimension mismatch or an all-zero vector.
  void add(std::string token, std::vector<double> vector);

  /// nullptr for OOV tokens.
  const std::vector<double>* find(std::string_view token) const;

  double similarity(std::string_view a, std::string_view b) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }

  void write(std::ostream& out) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, std::vector<double>, Hash, std::equal_to<>> vectors_;
  std::vector<std::string> order_;
  std::size_t dimension_ = 0;
};

/// Token similarity when no embedding table is available: exact match only.
inline double exact_match_similarity(std::string_view a, std::string_view b) {
  return a == b ? 1.0 : 0.0;
}

/// Dispatches to `table->similarity` or exact matching when `table` is null.
inline double token_similarity(const EmbeddingTable* table, std::string_view a,
                               std::string_view b) {
  return table ? table->similarity(a, b) : exact_match_similarity(a, b);
}

}  // namespace aosumm
