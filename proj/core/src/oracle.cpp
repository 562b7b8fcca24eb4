#include "aosumm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "aosumm/rouge.hpp"
#include "json.hpp"

namespace aosumm {

using nlohmann::json;

std::size_t SelectionVector::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

std::vector<std::size_t> SelectionVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(i);
  }
  return out;
}

double score_rouge2(std::span<const std::string> candidate, std::span<const std::string> target) {
  return rouge_n(candidate, target, 2) / 100.0;
}

double score_embed(std::span<const std::string> candidate, std::span<const std::string> target,
                   const EmbeddingTable* table) {
  if (candidate.empty() || target.empty()) return 0.0;
  const auto directed = [table](std::span<const std::string> from,
                                std::span<const std::string> to) {
    double sum = 0.0;
    for (const auto& a : from) {
      double best = 0.0;
      for (const auto& b : to) best = std::max(best, token_similarity(table, a, b));
      sum += std::min(best, 1.0);
    }
    return sum / static_cast<double>(from.size());
  };
  const double precision = directed(candidate, target);
  const double recall = directed(target, candidate);
  if (precision + recall <= 0.0) return 0.0;
  return std::clamp(2.0 * precision * recall / (precision + recall), 0.0, 1.0);
}

ScorerKind parse_scorer_kind(std::string_view name) {
  if (name == "rouge2") return ScorerKind::rouge2;
  if (name == "embed") return ScorerKind::embed;
  throw std::invalid_argument("unknown scorer \"" + std::string(name) +
                              "\" (expected rouge2 or embed)");
}

std::string_view to_string(ScorerKind kind) {
  return kind == ScorerKind::rouge2 ? "rouge2" : "embed";
}

std::unique_ptr<SimilarityScorer> make_scorer(ScorerKind kind, const EmbeddingTable* table) {
  if (kind == ScorerKind::rouge2) return std::make_unique<Rouge2Scorer>();
  return std::make_unique<EmbedScorer>(table);
}

std::size_t keyword_repeat_count(std::size_t summary_tokens, std::size_t num_keywords, double r) {
  if (num_keywords == 0) throw std::invalid_argument("keyword_repeat_count: no keywords");
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("keyword_repeat_count: r must be a positive finite number");
  }
  const double n = r * static_cast<double>(summary_tokens) / static_cast<double>(num_keywords);
  const auto rounded = static_cast<std::size_t>(std::floor(n + 0.5));
  return std::max<std::size_t>(rounded, 1);
}

Tokens augment_reference(std::span<const std::string> summary_tokens,
                         std::span<const std::string> keywords, double r) {
  const std::size_t n = keyword_repeat_count(summary_tokens.size(), keywords.size(), r);
  Tokens out(summary_tokens.begin(), summary_tokens.end());
  out.reserve(summary_tokens.size() + n * keywords.size());
  for (const auto& k : keywords) out.insert(out.end(), n, k);
  return out;
}

Tokens selected_tokens(const Document& doc, std::span<const std::size_t> indices) {
  std::vector<std::size_t> order(indices.begin(), indices.end());
  std::sort(order.begin(), order.end());
  Tokens out;
  for (auto i : order) {
    const auto& t = doc.sentences.at(i).tokens;
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

OracleResult greedy_oracle(const Document& doc, std::span<const std::string> target,
                           const SimilarityScorer& scorer, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("greedy_oracle: budget must be >= 1");
  OracleResult result;
  result.labels.bits.assign(doc.size(), false);
  result.labels.budget = budget;

  std::vector<std::size_t> chosen;
  while (chosen.size() < budget) {
    double best_score = result.score;
    std::size_t best = doc.size();
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (result.labels.bits[i]) continue;
      auto trial = chosen;
      trial.push_back(i);
      const double s = scorer.score(selected_tokens(doc, trial), target);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    if (best == doc.size()) break;
    chosen.push_back(best);
    result.labels.bits[best] = true;
    result.score = best_score;
    result.trajectory.push_back(best_score);
  }
  return result;
}

TrainingSet build_training_set(const Corpus& corpus, const TrainingConfig& config,
                               const EmbeddingTable* table) {
  TrainingSet out;
  if (corpus.empty()) return out;
  const auto idf = IdfTable::build(corpus);
  const auto scorer = make_scorer(config.scorer, table);

  for (const auto& doc : corpus.documents) {
    if (!doc.reference || doc.reference->empty()) {
      ++out.skipped_no_reference;
      continue;
    }
    const auto summary = tokenize(*doc.reference);
    const auto keywords = extract_keywords(doc, idf, config.max_k);
    if (keywords.empty()) {
      ++out.empty_keyword_docs;
    } else {
      const auto target = augment_reference(summary, keywords.keywords, config.r);
      out.examples.push_back(
          {doc.id, keywords.keywords, greedy_oracle(doc, target, *scorer, config.budget).labels});
    }
    if (config.mixed) {
      out.examples.push_back(
          {doc.id, {}, greedy_oracle(doc, summary, *scorer, config.budget).labels});
    }
  }
  return out;
}

double label_difference_rate(std::span<const TrainingExample> a,
                             std::span<const TrainingExample> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("label_difference_rate: training sets differ in size");
  }
  std::size_t total = 0;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].doc_id != b[i].doc_id || a[i].labels.bits.size() != b[i].labels.bits.size()) {
      throw std::invalid_argument("label_difference_rate: example " + std::to_string(i) +
                                  " is not aligned");
    }
    for (std::size_t j = 0; j < a[i].labels.bits.size(); ++j) {
      ++total;
      if (a[i].labels.bits[j] != b[i].labels.bits[j]) ++differing;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(differing) / static_cast<double>(total);
}

void write_training_set(std::ostream& out, std::span<const TrainingExample> examples) {
  for (const auto& ex : examples) {
    json obj;
    obj["doc_id"] = ex.doc_id;
    obj["keywords"] = ex.keywords;
    json labels = json::array();
    for (bool b : ex.labels.bits) labels.push_back(b ? 1 : 0);
    obj["labels"] = std::move(labels);
    obj["budget"] = ex.labels.budget;
    out << obj.dump() << '\n';
  }
}

std::vector<TrainingExample> parse_training_set(std::istream& in) {
  std::vector<TrainingExample> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const auto where = "training line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where + ": malformed JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("doc_id") || !obj["doc_id"].is_string() ||
        !obj.contains("labels") || !obj["labels"].is_array()) {
      throw DataError(where + ": expected {\"doc_id\", \"keywords\", \"labels\"}");
    }
    TrainingExample ex;
    ex.doc_id = obj["doc_id"].get<std::string>();
    if (auto k = obj.find("keywords"); k != obj.end()) {
      if (!k->is_array()) throw DataError(where + ": \"keywords\" must be an array");
      for (const auto& w : *k) {
        if (!w.is_string()) throw DataError(where + ": keywords must be strings");
        ex.keywords.push_back(w.get<std::string>());
      }
    }
    for (const auto& l : obj["labels"]) {
      if (!l.is_number_integer() || (l.get<int>() != 0 && l.get<int>() != 1)) {
        throw DataError(where + ": labels must be 0 or 1");
      }
      ex.labels.bits.push_back(l.get<int>() == 1);
    }
    ex.labels.budget = ex.labels.count();
    if (auto b = obj.find("budget"); b != obj.end()) {
      if (!b->is_number_unsigned()) throw DataError(where + ": \"budget\" must be a count");
      ex.labels.budget = b->get<std::size_t>();
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<TrainingExample> load_training_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open training file " + path.string());
  return parse_training_set(in);
}

}  // namespace aosumm
