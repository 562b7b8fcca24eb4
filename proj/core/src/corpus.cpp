#include "aosumm/corpus.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "json.hpp"

namespace aosumm {

namespace {

using nlohmann::json;

bool is_alnum(unsigned char c) {
  return c < 0x80 && std::isalnum(c) != 0;
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_upper(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return uc < 0x80 && std::isupper(uc) != 0;
}

bool is_closer(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

constexpr std::array<std::string_view, 9> kAbbreviations = {
    "Mr", "Mrs", "Dr", "St", "U.S", "a.m", "p.m", "No", "vs"};

// The word immediately before position `dot` (exclusive), back to the previous
// whitespace or opening bracket/quote.
std::string_view word_before(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0 && !is_space(text[start - 1]) && text[start - 1] != '(' &&
         text[start - 1] != '"' && text[start - 1] != '[') {
    --start;
  }
  return text.substr(start, dot - start);
}

bool is_abbreviation(std::string_view word) {
  for (auto abbr : kAbbreviations) {
    if (word == abbr) return true;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Sentence> make_sentences(const std::vector<std::string>& texts) {
  std::vector<Sentence> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(Sentence{out.size(), t, tokenize(t)});
  }
  return out;
}

Document parse_document_line(const std::string& line, std::size_t line_no) {
  const auto where = [&] { return "line " + std::to_string(line_no); };
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError(where() + ": malformed JSON: " + e.what());
  }
  if (!obj.is_object()) throw DataError(where() + ": expected a JSON object");
  if (!obj.contains("id") || !obj["id"].is_string() ||
      obj["id"].get<std::string>().empty()) {
    throw DataError(where() + ": missing or empty string field \"id\"");
  }

  std::vector<std::string> texts;
  if (auto it = obj.find("sentences"); it != obj.end()) {
    if (!it->is_array()) throw DataError(where() + ": \"sentences\" must be an array");
    for (const auto& s : *it) {
      if (!s.is_string()) throw DataError(where() + ": sentences must be strings");
      texts.push_back(s.get<std::string>());
    }
  } else if (auto t = obj.find("text"); t != obj.end()) {
    if (!t->is_string()) throw DataError(where() + ": \"text\" must be a string");
    texts = split_sentences(t->get<std::string>());
  } else {
    throw DataError(where() + ": document needs \"sentences\" or \"text\"");
  }
  if (texts.empty()) throw DataError(where() + ": document has no sentences");

  std::optional<std::string> reference;
  if (auto s = obj.find("summary"); s != obj.end() && !s->is_null()) {
    if (!s->is_string()) throw DataError(where() + ": \"summary\" must be a string");
    reference = s->get<std::string>();
  }
  return make_document(obj["id"].get<std::string>(), texts, std::move(reference));
}

}  // namespace

const Document* Corpus::find(std::string_view id) const {
  for (const auto& d : documents) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

Tokens tokenize(std::string_view text) {
  Tokens tokens;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_alnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    const std::size_t term = i;
    std::size_t end = i + 1;
    while (end < n && (text[end] == '.' || text[end] == '!' || text[end] == '?')) ++end;
    while (end < n && is_closer(text[end])) ++end;

    std::size_t next = end;
    while (next < n && is_space(text[next])) ++next;
    const bool boundary =
        next == n || (next > end && is_upper(text[next]));
    const bool abbreviation = c == '.' && is_abbreviation(word_before(text, term));
    if (boundary && !abbreviation) {
      auto piece = trim(text.substr(start, end - start));
      if (!piece.empty()) out.emplace_back(piece);
      start = next;
    }
    i = end;
  }
  if (start < n) {
    auto piece = trim(text.substr(start));
    if (!piece.empty()) out.emplace_back(piece);
  }
  return out;
}

Document make_document(std::string id, const std::vector<std::string>& sentences,
                       std::optional<std::string> reference) {
  return Document{std::move(id), make_sentences(sentences), std::move(reference)};
}

Document truncate(const Document& doc, std::size_t max_sentences) {
  if (max_sentences == 0) throw std::invalid_argument("truncate: max_sentences must be >= 1");
  Document out = doc;
  if (out.sentences.size() > max_sentences) out.sentences.resize(max_sentences);
  for (std::size_t i = 0; i < out.sentences.size(); ++i) out.sentences[i].index = i;
  return out;
}

Document concat_documents(std::span<const Document> docs, std::string new_id) {
  if (docs.empty()) throw std::invalid_argument("concat_documents: no documents given");
  Document out;
  out.id = std::move(new_id);
  std::string reference;
  bool any_reference = false;
  for (const auto& d : docs) {
    for (const auto& s : d.sentences) {
      out.sentences.push_back(s);
      out.sentences.back().index = out.sentences.size() - 1;
    }
    if (d.reference) {
      if (any_reference) reference += '\n';
      reference += *d.reference;
      any_reference = true;
    }
  }
  if (any_reference) out.reference = std::move(reference);
  return out;
}

Corpus parse_corpus(std::istream& in, std::string provenance) {
  Corpus corpus;
  corpus.provenance = std::move(provenance);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    Document doc = parse_document_line(line, line_no);
    if (!seen.insert(doc.id).second) {
      throw DataError("line " + std::to_string(line_no) + ": duplicate document id \"" +
                      doc.id + "\"");
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return parse_corpus(in, path.string());
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& d : corpus.documents) {
    json obj;
    obj["id"] = d.id;
    json sentences = json::array();
    for (const auto& s : d.sentences) sentences.push_back(s.text);
    obj["sentences"] = std::move(sentences);
    if (d.reference) obj["summary"] = *d.reference;
    out << obj.dump() << '\n';
  }
}

void save_corpus(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  write_corpus(out, corpus);
}

}  // namespace aosumm
