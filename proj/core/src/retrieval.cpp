#include "aosumm/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aosumm {

namespace {

void normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  if (norm <= 0.0) return;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
}

}  // namespace

TfidfEncoder::TfidfEncoder(const IdfTable& idf) {
  for (const auto& [token, df] : idf.document_frequencies()) {
    index_.emplace(token, index_.size());
    weights_.push_back(idf.idf(token));
  }
}

std::vector<double> TfidfEncoder::encode(std::string_view text) const {
  std::vector<double> v(index_.size(), 0.0);
  for (const auto& t : tokenize(text)) {
    auto it = index_.find(t);
    if (it != index_.end()) v[it->second] += weights_[it->second];
  }
  normalize(v);
  return v;
}

std::vector<double> WordVectorEncoder::encode(std::string_view text) const {
  std::vector<double> v(table_->dimension(), 0.0);
  std::size_t used = 0;
  for (const auto& t : tokenize(text)) {
    if (const auto* w = table_->find(t)) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*w)[i];
      ++used;
    }
  }
  if (used > 0) {
    for (double& x : v) x /= static_cast<double>(used);
  }
  return v;
}

bool is_zero_vector(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  }
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

DocScore doc_similarity(const Document& doc, const ExemplarQuery& exemplar,
                        const SentenceEncoder& encoder) {
  if (doc.empty()) {
    throw std::invalid_argument("doc_similarity: document \"" + doc.id + "\" is empty");
  }
  if (exemplar.text.empty()) throw std::invalid_argument("doc_similarity: empty exemplar");
  const auto query = encoder.encode(exemplar.text);
  const bool query_zero = is_zero_vector(query);

  DocScore out{doc.id, 0.0, 0};
  std::vector<double> cosines;
  cosines.reserve(doc.size());
  for (const auto& s : doc.sentences) {
    const auto v = encoder.encode(s.text);
    if (query_zero || is_zero_vector(v)) {
      ++out.zero_vector_pairs;
      continue;
    }
    cosines.push_back(cosine(v, query));
  }
  // Summing in sorted order makes the score independent of sentence order.
  std::sort(cosines.begin(), cosines.end());
  double sum = 0.0;
  for (double c : cosines) sum += c;
  out.score = sum / static_cast<double>(doc.size());
  return out;
}

std::vector<DocScore> retrieve_top(const Corpus& corpus, const ExemplarQuery& exemplar,
                                   std::size_t k, const SentenceEncoder& encoder) {
  if (k == 0) throw std::invalid_argument("retrieve_top: k must be >= 1");
  std::vector<DocScore> scored;
  scored.reserve(corpus.size());
  for (const auto& doc : corpus.documents) {
    scored.push_back(doc_similarity(doc, exemplar, encoder));
  }
  std::sort(scored.begin(), scored.end(), [](const DocScore& a, const DocScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

}  // namespace aosumm
