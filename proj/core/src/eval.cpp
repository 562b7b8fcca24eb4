#include "aosumm/eval.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>

#include "aosumm/oracle.hpp"
#include "aosumm/rouge.hpp"
#include "json.hpp"

namespace aosumm {

namespace {

using nlohmann::json;

bool overlaps(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

IndexSet sorted_unique(std::span<const std::size_t> v) {
  IndexSet out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t intersection_size(const IndexSet& a, const IndexSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

std::size_t AnnotationSet::sentence_count() const {
  return records.empty() ? 0 : records.front().ratings.size();
}

std::vector<IndexSet> AnnotationSet::selections() const {
  std::vector<IndexSet> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.selected());
  return out;
}

std::optional<AnnotationSet> filter_annotations(std::span<const AnnotationRecord> records) {
  if (records.empty()) throw std::invalid_argument("filter_annotations: no records");
  const auto& first = records.front();
  for (const auto& r : records) {
    if (r.doc_id != first.doc_id || r.aspect != first.aspect) {
      throw DataError("filter_annotations: records mix documents or aspects");
    }
    if (r.ratings.size() != first.ratings.size()) {
      throw DataError("filter_annotations: annotators of \"" + first.doc_id +
                      "\" rated different sentence counts");
    }
  }

  AnnotationSet out{first.doc_id, first.aspect, {}, 0};
  if (records.size() == 1) {
    out.records.assign(records.begin(), records.end());
    return out;
  }
  std::vector<IndexSet> selected;
  for (const auto& r : records) selected.push_back(r.selected());
  for (std::size_t a = 0; a < records.size(); ++a) {
    bool keep = false;
    for (std::size_t b = 0; b < records.size() && !keep; ++b) {
      keep = a != b && overlaps(selected[a], selected[b]);
    }
    if (keep) {
      out.records.push_back(records[a]);
    } else {
      ++out.discarded;
    }
  }
  if (out.records.empty()) return std::nullopt;
  return out;
}

FilteredAnnotations group_and_filter(std::span<const AnnotationRecord> records) {
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::vector<AnnotationRecord>> groups;
  for (const auto& r : records) {
    auto key = std::make_pair(r.aspect, r.doc_id);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    it->second.push_back(r);
  }
  FilteredAnnotations out;
  for (const auto& key : keys) {
    const auto& group = groups.at(key);
    auto set = filter_annotations(group);
    if (set) {
      out.discarded_annotators += set->discarded;
      out.sets.push_back(std::move(*set));
    } else {
      out.discarded_annotators += group.size();
      out.excluded.push_back({key.first, key.second, group.size()});
    }
  }
  return out;
}

double set_f1(std::span<const std::size_t> pred, std::span<const std::size_t> selected) {
  const auto p = sorted_unique(pred);
  const auto s = sorted_unique(selected);
  if (p.empty() && s.empty()) return 100.0;
  if (p.empty() || s.empty()) return 0.0;
  return 100.0 * 2.0 * static_cast<double>(intersection_size(p, s)) /
         static_cast<double>(p.size() + s.size());
}

double f1_soft(std::span<const std::size_t> pred, const AnnotationSet& ann) {
  if (ann.records.empty()) throw std::invalid_argument("f1_soft: annotation set is empty");
  const std::size_t n = ann.sentence_count();
  for (auto i : pred) {
    if (i >= n) {
      throw std::invalid_argument("f1_soft: predicted index " + std::to_string(i) +
                                  " outside the " + std::to_string(n) + " rated sentences of \"" +
                                  ann.doc_id + "\"");
    }
  }
  double sum = 0.0;
  for (const auto& r : ann.records) sum += set_f1(pred, r.selected());
  return sum / static_cast<double>(ann.records.size());
}

double max_f1(const AnnotationSet& ann, std::size_t m, std::size_t n_sentences) {
  if (n_sentences > kMaxEnumerationSentences) {
    throw std::invalid_argument(
        "max_f1: " + std::to_string(n_sentences) + " sentences exceed the enumeration bound of " +
        std::to_string(kMaxEnumerationSentences) +
        "; truncate the document or estimate the bound by sampling subsets");
  }
  if (ann.records.empty()) throw std::invalid_argument("max_f1: annotation set is empty");
  std::vector<std::uint32_t> masks;
  for (const auto& r : ann.records) {
    std::uint32_t mask = 0;
    for (auto i : r.selected()) {
      if (i < n_sentences) mask |= std::uint32_t{1} << i;
    }
    masks.push_back(mask);
  }
  const auto set_f1_mask = [](std::uint32_t p, std::uint32_t s) {
    const int np = std::popcount(p);
    const int ns = std::popcount(s);
    if (np == 0 && ns == 0) return 100.0;
    if (np == 0 || ns == 0) return 0.0;
    return 100.0 * 2.0 * std::popcount(p & s) / static_cast<double>(np + ns);
  };

  double best = 0.0;
  const std::uint32_t limit = std::uint32_t{1} << n_sentences;
  for (std::uint32_t p = 0; p < limit; ++p) {
    if (static_cast<std::size_t>(std::popcount(p)) > m) continue;
    double sum = 0.0;
    for (auto s : masks) sum += set_f1_mask(p, s);
    best = std::max(best, sum / static_cast<double>(masks.size()));
  }
  return best;
}

double jaccard(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const auto x = sorted_unique(a);
  const auto y = sorted_unique(b);
  if (x.empty() && y.empty()) return 1.0;
  const std::size_t inter = intersection_size(x, y);
  return static_cast<double>(inter) / static_cast<double>(x.size() + y.size() - inter);
}

SensitivityReport sensitivity_report(const Predictions& a, const Predictions& b) {
  if (a.size() != b.size() ||
      !std::equal(a.begin(), a.end(), b.begin(),
                  [](const auto& x, const auto& y) { return x.first == y.first; })) {
    throw std::invalid_argument("sensitivity_report: the two runs cover different documents");
  }
  SensitivityReport out;
  out.docs = a.size();
  if (a.empty()) return out;
  double sum = 0.0;
  std::size_t exact = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end(); ++i, ++j) {
    sum += jaccard(i->second, j->second);
    if (sorted_unique(i->second) == sorted_unique(j->second)) ++exact;
  }
  out.mean_jaccard = sum / static_cast<double>(a.size());
  out.exact_match_pct = 100.0 * static_cast<double>(exact) / static_cast<double>(a.size());
  return out;
}

std::vector<double> agreement_histogram(std::span<const AnnotationSet> sets) {
  std::size_t annotators = 0;
  for (const auto& s : sets) annotators = std::max(annotators, s.records.size());
  std::vector<double> hist(annotators, 0.0);
  std::size_t total = 0;
  for (const auto& s : sets) {
    std::map<std::size_t, std::size_t> votes;
    for (const auto& r : s.records) {
      for (auto i : r.selected()) ++votes[i];
    }
    for (const auto& [sentence, count] : votes) {
      hist[count - 1] += 1.0;
      ++total;
    }
  }
  if (total > 0) {
    for (double& h : hist) h = 100.0 * h / static_cast<double>(total);
  }
  return hist;
}

EvalReport evaluate(const Predictions& predictions, std::span<const AnnotationRecord> records,
                    const Corpus& corpus, std::size_t m, const std::optional<std::string>& aspect) {
  if (m == 0) throw std::invalid_argument("evaluate: m must be >= 1");
  std::vector<AnnotationRecord> chosen;
  for (const auto& r : records) {
    if (!aspect || r.aspect == *aspect) chosen.push_back(r);
  }
  const auto filtered = group_and_filter(chosen);

  std::map<std::string, std::map<std::string, const AnnotationSet*>> by_aspect;
  std::map<std::string, AspectScores> totals;
  for (const auto& s : filtered.sets) {
    by_aspect[s.aspect][s.doc_id] = &s;
    totals[s.aspect].discarded_annotators += s.discarded;
  }
  for (const auto& ex : filtered.excluded) {
    totals[ex.aspect].excluded_docs += 1;
    totals[ex.aspect].discarded_annotators += ex.annotators;
  }

  EvalReport report;
  report.m = m;
  for (auto& [label, scores] : totals) {
    const auto sets_it = by_aspect.find(label);
    for (const auto& [doc_id, pred] : predictions) {
      const AnnotationSet* ann = nullptr;
      if (sets_it != by_aspect.end()) {
        auto it = sets_it->second.find(doc_id);
        if (it != sets_it->second.end()) ann = it->second;
      }
      const Document* doc = corpus.find(doc_id);
      if (ann == nullptr || doc == nullptr) {
        ++scores.skipped_docs;
        continue;
      }
      if (ann->sentence_count() > doc->size()) {
        throw DataError("evaluate: annotations of \"" + doc_id + "\" rate " +
                        std::to_string(ann->sentence_count()) + " sentences but the document has " +
                        std::to_string(doc->size()));
      }
      scores.f1 += f1_soft(pred, *ann);
      scores.max_f1 += max_f1(*ann, m, ann->sentence_count());
      const auto candidate = selected_tokens(*doc, pred);
      double r1 = 0.0;
      double r2 = 0.0;
      double rl = 0.0;
      for (const auto& sel : ann->selections()) {
        const auto reference = selected_tokens(*doc, sel);
        r1 += rouge_n(candidate, reference, 1);
        r2 += rouge_n(candidate, reference, 2);
        rl += rouge_l(candidate, reference);
      }
      const double a = static_cast<double>(ann->records.size());
      scores.rouge1 += r1 / a;
      scores.rouge2 += r2 / a;
      scores.rouge_l += rl / a;
      ++scores.docs;
    }
    if (scores.docs > 0) {
      const double n = static_cast<double>(scores.docs);
      scores.f1 /= n;
      scores.max_f1 /= n;
      scores.rouge1 /= n;
      scores.rouge2 /= n;
      scores.rouge_l /= n;
    }
    report.aspects[label] = scores;
  }
  return report;
}

Predictions parse_predictions(std::istream& in) {
  Predictions out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const auto where = "predictions line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where + ": malformed JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("doc_id") || !obj["doc_id"].is_string() ||
        !obj.contains("indices") || !obj["indices"].is_array()) {
      throw DataError(where + ": expected {\"doc_id\", \"indices\"}");
    }
    IndexSet indices;
    for (const auto& i : obj["indices"]) {
      if (!i.is_number_unsigned()) throw DataError(where + ": indices must be non-negative");
      indices.push_back(i.get<std::size_t>());
    }
    const auto id = obj["doc_id"].get<std::string>();
    if (!out.emplace(id, std::move(indices)).second) {
      throw DataError(where + ": duplicate prediction for \"" + id + "\"");
    }
  }
  return out;
}

Predictions load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open predictions file " + path.string());
  return parse_predictions(in);
}

}  // namespace aosumm
