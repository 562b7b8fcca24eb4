#include "aosumm/keywords.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace aosumm {

namespace {

using nlohmann::json;

// English function words. Frame words of news prose ("said", "also", ...)
// are included as well since they dominate tf in small corpora.
const std::unordered_set<std::string_view>& stopwords() {
  static const std::unordered_set<std::string_view> words = {
      "a",       "about",   "above",  "after",   "again",   "against", "all",
      "also",    "am",      "an",     "and",     "any",     "are",     "as",
      "at",      "be",      "because", "been",   "before",  "being",   "below",
      "between", "both",    "but",    "by",      "can",     "could",   "did",
      "do",      "does",    "doing",  "down",    "during",  "each",    "few",
      "for",     "from",    "further", "had",    "has",     "have",    "having",
      "he",      "her",     "here",   "hers",    "herself", "him",     "himself",
      "his",     "how",     "i",      "if",      "in",      "into",    "is",
      "it",      "its",     "itself", "just",    "me",      "more",    "most",
      "my",      "myself",  "no",     "nor",     "not",     "now",     "of",
      "off",     "on",      "once",   "only",    "or",      "other",   "our",
      "ours",    "ourselves", "out",  "over",    "own",     "same",    "she",
      "should",  "so",      "some",   "such",    "than",    "that",    "the",
      "their",   "theirs",  "them",   "themselves", "then", "there",   "these",
      "they",    "this",    "those",  "through", "to",      "too",     "under",
      "until",   "up",      "very",   "was",     "we",      "were",    "what",
      "when",    "where",   "which",  "while",   "who",     "whom",    "why",
      "will",    "with",    "would",  "you",     "your",    "yours",   "yourself",
      "yourselves", "said", "says",   "say",     "one",     "two",     "new",
      "like",    "may",     "might",  "must",    "us",      "since",   "around",
      "among",   "across",  "near",   "per",     "via",     "s",       "t",
      "don",     "didn",    "doesn",  "isn",     "wasn",    "weren",   "won",
      "according", "told",  "yet",     "still",   "even",    "ever",
      "many",    "much",    "every",  "another", "within",  "without", "upon",
      "whether", "however", "although", "though", "onto",   "cnn"};
  return words;
}

}  // namespace

IdfTable IdfTable::build(const Corpus& corpus) {
  if (corpus.empty()) throw std::invalid_argument("build_idf: corpus is empty");
  IdfTable table;
  table.doc_count_ = corpus.size();
  for (const auto& doc : corpus.documents) {
    std::set<std::string_view> seen;
    for (const auto& s : doc.sentences) {
      for (const auto& t : s.tokens) seen.insert(t);
    }
    for (auto t : seen) {
      auto it = table.df_.find(t);
      if (it == table.df_.end()) {
        table.df_.emplace(std::string(t), 1);
      } else {
        ++it->second;
      }
    }
  }
  return table;
}

std::size_t IdfTable::df(std::string_view token) const {
  auto it = df_.find(token);
  return it == df_.end() ? 1 : it->second;
}

bool IdfTable::contains(std::string_view token) const {
  return df_.find(token) != df_.end();
}

double IdfTable::idf(std::string_view token) const {
  if (doc_count_ == 0) return 0.0;
  return std::log(static_cast<double>(doc_count_) / static_cast<double>(df(token)));
}

bool KeywordSet::contains(std::string_view token) const {
  return std::find(keywords.begin(), keywords.end(), token) != keywords.end();
}

std::vector<std::string> normalize_keywords(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& r : raw) {
    for (auto& t : tokenize(r)) {
      if (seen.insert(t).second) out.push_back(std::move(t));
    }
  }
  return out;
}

bool is_stopword(std::string_view token) {
  return stopwords().contains(token);
}

KeywordSet extract_keywords(const Document& doc, const IdfTable& idf, std::size_t max_k) {
  if (max_k == 0) throw std::invalid_argument("extract_keywords: max_k must be >= 1");
  if (!doc.reference || doc.reference->empty()) {
    throw std::invalid_argument("extract_keywords: document \"" + doc.id +
                                "\" has no reference summary");
  }
  const auto ref_tokens = tokenize(*doc.reference);
  const std::unordered_set<std::string> in_reference(ref_tokens.begin(), ref_tokens.end());

  struct Candidate {
    std::string token;
    std::size_t count = 0;
    std::size_t first = 0;
  };
  std::vector<Candidate> candidates;
  std::unordered_map<std::string, std::size_t> slot;
  std::size_t position = 0;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) {
      auto [it, inserted] = slot.emplace(t, candidates.size());
      if (inserted) candidates.push_back({t, 0, position});
      ++candidates[it->second].count;
      ++position;
    }
  }

  struct Scored {
    double score;
    std::size_t first;
    const std::string* token;
  };
  std::vector<Scored> ranked;
  for (const auto& c : candidates) {
    if (is_stopword(c.token) || !in_reference.contains(c.token)) continue;
    const double score = static_cast<double>(c.count) * idf.idf(c.token);
    if (score <= 0.0) continue;
    ranked.push_back({score, c.first, &c.token});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.first < b.first;
  });

  KeywordSet out;
  out.aspect_label = doc.id;
  for (std::size_t i = 0; i < ranked.size() && i < max_k; ++i) {
    out.keywords.push_back(*ranked[i].token);
  }
  return out;
}

std::vector<KeywordSet> parse_aspect_keywords(std::istream& in) {
  json arr;
  try {
    arr = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("aspect file: malformed JSON: ") + e.what());
  }
  if (!arr.is_array()) throw DataError("aspect file: expected a JSON array");
  std::vector<KeywordSet> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& entry = arr[i];
    const auto where = "aspect entry " + std::to_string(i);
    if (!entry.is_object() || !entry.contains("aspect") || !entry["aspect"].is_string() ||
        !entry.contains("keywords") || !entry["keywords"].is_array()) {
      throw DataError(where + ": expected {\"aspect\", \"keywords\": [...]}");
    }
    KeywordSet set;
    set.aspect_label = entry["aspect"].get<std::string>();
    if (auto p = entry.find("prompt"); p != entry.end() && p->is_string()) {
      set.prompt = p->get<std::string>();
    }
    std::vector<std::string> raw;
    for (const auto& k : entry["keywords"]) {
      if (!k.is_string()) throw DataError(where + ": keywords must be strings");
      raw.push_back(k.get<std::string>());
    }
    set.keywords = normalize_keywords(raw);
    if (set.keywords.empty()) {
      throw DataError(where + " (\"" + set.aspect_label + "\"): empty keyword list");
    }
    out.push_back(std::move(set));
  }
  return out;
}

std::vector<KeywordSet> load_aspect_keywords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open aspect file " + path.string());
  return parse_aspect_keywords(in);
}

void write_aspect_keywords(std::ostream& out, const std::vector<KeywordSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) {
    json obj;
    obj["aspect"] = s.aspect_label;
    if (!s.prompt.empty()) obj["prompt"] = s.prompt;
    obj["keywords"] = s.keywords;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

std::vector<KeywordSet> default_aspect_keywords() {
  return {
      {"geo", "geography, region, or location",
       {"region", "location", "country", "geography", "miles"}},
      {"recv",
       "recovery and aid efforts (death toll and injuries, foreign/domestic government "
       "assistance, impact on survivors)",
       {"recovery", "aid", "survivor", "injury", "death"}},
      {"pen", "penalty or consequences for the fraudster, or for others",
       {"penalty", "consequences", "jailed", "fined", "court"}},
      {"nature",
       "nature of the fraud: the amount of money taken, benefits for the fraudster, and how "
       "the fraud worked",
       {"amount", "money", "bank", "stolen", "time"}},
  };
}

}  // namespace aosumm
