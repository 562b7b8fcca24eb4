#include "aosumm/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "json.hpp"

namespace aosumm {

using nlohmann::json;

namespace {

double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double dot(const Weights& w, const FeatureVector& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < kFeatureDim; ++j) s += w[j] * x[j];
  return s;
}

}  // namespace

const std::array<std::string_view, kFeatureDim>& feature_names() {
  static const std::array<std::string_view, kFeatureDim> names = {
      "bias",          "position",        "keyword_match",
      "keyword_max_similarity", "keyword_mean_similarity", "salience",
      "centroid_cosine", "log_length",    "has_keywords"};
  return names;
}

DocumentFeaturizer::DocumentFeaturizer(const Document& doc,
                                       std::span<const std::string> keywords,
                                       const IdfTable& idf, const EmbeddingTable* table)
    : doc_(&doc), keywords_(keywords), idf_(&idf), table_(table) {
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) ++doc_tf_[t];
  }
  double norm = 0.0;
  for (const auto& [t, count] : doc_tf_) {
    const double w = static_cast<double>(count) * idf.idf(t);
    norm += w * w;
    max_salience_ = std::max(max_salience_, w);
  }
  centroid_norm_ = std::sqrt(norm);
}

FeatureVector DocumentFeaturizer::featurize(std::size_t i) const {
  if (i >= doc_->size()) {
    throw std::out_of_range("featurize: sentence index " + std::to_string(i) +
                            " out of range for document \"" + doc_->id + "\" of " +
                            std::to_string(doc_->size()) + " sentences");
  }
  const auto& tokens = doc_->sentences[i].tokens;
  const double length = static_cast<double>(tokens.size());
  FeatureVector x{};
  x[kBias] = 1.0;
  x[kPosition] = static_cast<double>(i) / static_cast<double>(doc_->size());
  x[kLogLength] = std::log1p(length);

  if (!tokens.empty()) {
    std::unordered_map<std::string_view, std::size_t> sentence_tf;
    for (const auto& t : tokens) ++sentence_tf[t];
    double salience = 0.0;
    double cross = 0.0;
    double norm = 0.0;
    for (const auto& t : tokens) {
      salience += static_cast<double>(doc_tf_.at(t)) * idf_->idf(t);
    }
    for (const auto& [t, count] : sentence_tf) {
      const double idf = idf_->idf(t);
      const double w = static_cast<double>(count) * idf;
      cross += w * static_cast<double>(doc_tf_.at(t)) * idf;
      norm += w * w;
    }
    if (max_salience_ > 0.0) x[kSalience] = salience / length / max_salience_;
    if (norm > 0.0 && centroid_norm_ > 0.0) {
      x[kCentroidCosine] = cross / (std::sqrt(norm) * centroid_norm_);
    }
  }

  if (!keywords_.empty()) {
    x[kHasKeywords] = 1.0;
    if (!tokens.empty()) {
      std::unordered_set<std::string_view> present(tokens.begin(), tokens.end());
      std::size_t matched = 0;
      double best_overall = 0.0;
      double sum_best = 0.0;
      for (const auto& k : keywords_) {
        if (present.contains(k)) ++matched;
        double best = 0.0;
        for (const auto& t : tokens) best = std::max(best, token_similarity(table_, k, t));
        best = std::min(best, 1.0);
        best_overall = std::max(best_overall, best);
        sum_best += best;
      }
      x[kKeywordMatch] = static_cast<double>(matched) / length;
      x[kKeywordMaxSimilarity] = best_overall;
      x[kKeywordMeanSimilarity] = sum_best / static_cast<double>(keywords_.size());
    }
  }
  return x;
}

FeatureVector featurize(const Document& doc, std::span<const std::string> keywords,
                        const IdfTable& idf, const EmbeddingTable* table, std::size_t i) {
  return DocumentFeaturizer(doc, keywords, idf, table).featurize(i);
}

double ScorerModel::logit(const FeatureVector& x) const { return dot(weights, x); }

double ScorerModel::probability(const FeatureVector& x) const { return sigmoid(logit(x)); }

Dataset assemble_dataset(std::span<const TrainingExample> examples, const Corpus& corpus,
                         const IdfTable& idf, const EmbeddingTable* table) {
  Dataset data;
  for (const auto& ex : examples) {
    const Document* doc = corpus.find(ex.doc_id);
    if (doc == nullptr) {
      throw DataError("training example refers to unknown document \"" + ex.doc_id + "\"");
    }
    if (ex.labels.bits.size() != doc->size()) {
      throw DataError("training example for \"" + ex.doc_id + "\" has " +
                      std::to_string(ex.labels.bits.size()) + " labels but the document has " +
                      std::to_string(doc->size()) + " sentences");
    }
    DocumentFeaturizer featurizer(*doc, ex.keywords, idf, table);
    for (std::size_t i = 0; i < doc->size(); ++i) {
      data.features.push_back(featurizer.featurize(i));
      data.labels.push_back(ex.labels.bits[i] ? 1.0 : 0.0);
    }
  }
  return data;
}

double objective(const Dataset& data, const Weights& w, double l2) {
  double loss = 0.0;
  for (std::size_t n = 0; n < data.size(); ++n) {
    const double z = dot(w, data.features[n]);
    loss += softplus(z) - data.labels[n] * z;
  }
  if (data.size() > 0) loss /= static_cast<double>(data.size());
  double penalty = 0.0;
  for (std::size_t j = 1; j < kFeatureDim; ++j) penalty += w[j] * w[j];
  return loss + 0.5 * l2 * penalty;
}

Weights objective_gradient(const Dataset& data, const Weights& w, double l2) {
  Weights g{};
  for (std::size_t n = 0; n < data.size(); ++n) {
    const auto& x = data.features[n];
    const double err = sigmoid(dot(w, x)) - data.labels[n];
    for (std::size_t j = 0; j < kFeatureDim; ++j) g[j] += err * x[j];
  }
  if (data.size() > 0) {
    for (double& v : g) v /= static_cast<double>(data.size());
  }
  for (std::size_t j = 1; j < kFeatureDim; ++j) g[j] += l2 * w[j];
  return g;
}

ScorerModel train(const Dataset& data, const Hyperparameters& hyper) {
  if (data.size() == 0) throw std::invalid_argument("train: no training sentences");
  ScorerModel model;
  model.hyper = hyper;
  model.loss_history.reserve(hyper.epochs + 1);
  double loss = objective(data, model.weights, hyper.l2);
  model.loss_history.push_back(loss);
  for (std::size_t epoch = 0; epoch < hyper.epochs; ++epoch) {
    const auto g = objective_gradient(data, model.weights, hyper.l2);
    for (std::size_t j = 0; j < kFeatureDim; ++j) model.weights[j] -= hyper.learning_rate * g[j];
    loss = objective(data, model.weights, hyper.l2);
    if (!std::isfinite(loss)) {
      throw TrainingError("train: loss became non-finite at epoch " + std::to_string(epoch + 1) +
                          " (learning rate " + std::to_string(hyper.learning_rate) +
                          "); lower the learning rate");
    }
    model.loss_history.push_back(loss);
  }
  model.final_loss = loss;
  return model;
}

ScorerModel train(std::span<const TrainingExample> examples, const Corpus& corpus,
                  const IdfTable& idf, const EmbeddingTable* table,
                  const Hyperparameters& hyper) {
  if (examples.empty()) throw std::invalid_argument("train: no training examples");
  return train(assemble_dataset(examples, corpus, idf, table), hyper);
}

std::vector<std::size_t> select_top(std::span<const double> scores, std::size_t m) {
  if (m == 0) throw std::invalid_argument("select_top: m must be >= 1");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  if (order.size() > m) order.resize(m);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::size_t> predict(const ScorerModel& model, const Document& doc,
                                 std::span<const std::string> keywords, const IdfTable& idf,
                                 const EmbeddingTable* table, std::size_t m) {
  if (m == 0) throw std::invalid_argument("predict: m must be >= 1");
  if (doc.empty()) throw std::invalid_argument("predict: document \"" + doc.id + "\" is empty");
  DocumentFeaturizer featurizer(doc, keywords, idf, table);
  std::vector<double> scores(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) scores[i] = model.logit(featurizer.featurize(i));
  return select_top(scores, m);
}

std::string join_sentences(const Document& doc, std::span<const std::size_t> indices) {
  std::vector<std::size_t> order(indices.begin(), indices.end());
  std::sort(order.begin(), order.end());
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) out += '\n';
    out += doc.sentences.at(order[k]).text;
  }
  return out;
}

std::string summarize_text(const ScorerModel& model, const Document& doc,
                           std::span<const std::string> keywords, const IdfTable& idf,
                           const EmbeddingTable* table, std::size_t m) {
  const auto indices = predict(model, doc, keywords, idf, table, m);
  return join_sentences(doc, indices);
}

void write_model(std::ostream& out, const ScorerModel& model) {
  json obj;
  obj["weights"] = model.weights;
  json names = json::array();
  for (auto n : feature_names()) names.push_back(std::string(n));
  obj["feature_names"] = std::move(names);
  obj["hyper"] = {{"learning_rate", model.hyper.learning_rate},
                  {"epochs", model.hyper.epochs},
                  {"l2", model.hyper.l2},
                  {"seed", model.hyper.seed}};
  obj["seed"] = model.hyper.seed;
  obj["final_loss"] = model.final_loss;
  out << obj.dump(2) << '\n';
}

ScorerModel parse_model(std::istream& in) {
  json obj;
  try {
    obj = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("model file: malformed JSON: ") + e.what());
  }
  if (!obj.is_object() || !obj.contains("weights") || !obj["weights"].is_array()) {
    throw DataError("model file: missing \"weights\" array");
  }
  const auto& w = obj["weights"];
  if (w.size() != kFeatureDim) {
    throw DataError("model file: expected " + std::to_string(kFeatureDim) + " weights, found " +
                    std::to_string(w.size()));
  }
  if (auto names = obj.find("feature_names"); names != obj.end()) {
    const auto& expected = feature_names();
    if (!names->is_array() || names->size() != kFeatureDim) {
      throw DataError("model file: feature_names does not match this build");
    }
    for (std::size_t j = 0; j < kFeatureDim; ++j) {
      if (!(*names)[j].is_string() || (*names)[j].get<std::string>() != expected[j]) {
        throw DataError("model file: feature " + std::to_string(j) + " is not \"" +
                        std::string(expected[j]) + "\"");
      }
    }
  }
  ScorerModel model;
  for (std::size_t j = 0; j < kFeatureDim; ++j) {
    if (!w[j].is_number()) throw DataError("model file: weights must be numbers");
    model.weights[j] = w[j].get<double>();
    if (!std::isfinite(model.weights[j])) throw DataError("model file: non-finite weight");
  }
  if (auto h = obj.find("hyper"); h != obj.end() && h->is_object()) {
    model.hyper.learning_rate = h->value("learning_rate", model.hyper.learning_rate);
    model.hyper.epochs = h->value("epochs", model.hyper.epochs);
    model.hyper.l2 = h->value("l2", model.hyper.l2);
    model.hyper.seed = h->value("seed", model.hyper.seed);
  }
  model.final_loss = obj.value("final_loss", 0.0);
  return model;
}

ScorerModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model file " + path.string());
  return parse_model(in);
}

}  // namespace aosumm
