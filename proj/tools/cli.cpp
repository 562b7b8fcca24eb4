#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "aosumm/annotations.hpp"
#include "aosumm/baselines.hpp"
#include "aosumm/corpus.hpp"
#include "aosumm/embedding.hpp"
#include "aosumm/eval.hpp"
#include "aosumm/keywords.hpp"
#include "aosumm/model.hpp"
#include "aosumm/oracle.hpp"
#include "aosumm/retrieval.hpp"
#include "aosumm/synth.hpp"
#include "json.hpp"

namespace aosumm::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Raised for argument combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config_path;
  std::string config_out;
  bool pretty = false;
};

struct RetrieveArgs {
  std::string corpus;
  std::string exemplar{kEarthquakeExemplar};
  std::string domain = "earthquake";
  std::size_t top = 10;
  std::string vectors;
  std::string out;
};

struct KeywordsArgs {
  std::string corpus;
  std::size_t max_k = 5;
  std::string out;
};

struct BuildTrainingArgs {
  std::string corpus;
  double r = 1.0;
  std::string scorer = "embed";
  std::string vectors;
  bool mixed = false;
  std::size_t budget = 3;
  std::size_t max_k = 5;
  std::string out;
};

struct TrainArgs {
  std::string training;
  std::string corpus;
  std::string out;
  std::string vectors;
  Hyperparameters hyper;
};

struct SummarizeArgs {
  std::string model;
  std::string baseline;
  std::string corpus;
  std::string keywords;
  std::string aspects;
  std::string aspect;
  std::size_t m = 3;
  std::string vectors;
  std::string scorer = "rouge2";
  std::size_t budget = 3;
  std::string out;
};

struct EvaluateArgs {
  std::string pred;
  std::string annotations;
  std::string corpus;
  std::size_t m = 3;
  std::string aspect;
  std::string out;
};

struct SensitivityArgs {
  std::string pred_a;
  std::string pred_b;
  std::string out;
};

struct SynthArgs {
  std::uint64_t seed = 1;
  std::size_t docs = 50;
  std::string out_dir;
  std::string vectors_out;
  bool discordant = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

std::optional<EmbeddingTable> maybe_vectors(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return EmbeddingTable::load(path);
}

const EmbeddingTable* ptr(const std::optional<EmbeddingTable>& t) {
  return t ? &*t : nullptr;
}

/// Writes to the --out path when given, otherwise to the report stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// Merges keys of a JSON config object under the explicit command line: a key
// is appended as --key only when the flag is not already present.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  std::string path;
  if (it != args.end() && std::next(it) != args.end()) {
    path = *std::next(it);
  } else {
    for (const auto& a : args) {
      if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("config file " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw DataError("config file " + path + ": expected a JSON object");

  std::vector<std::string> merged = args;
  if (auto sub = cfg.find("subcommand"); sub != cfg.end() && sub->is_string()) {
    const bool has_sub = std::any_of(args.begin(), args.end(),
                                     [&](const std::string& a) { return a == *sub; });
    if (!has_sub) merged.insert(merged.begin(), sub->get<std::string>());
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "subcommand" || key == "config" || key == "config-out") continue;
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) merged.push_back(flag);
    } else if (value.is_string()) {
      if (!value.get<std::string>().empty()) {
        merged.push_back(flag);
        merged.push_back(value.get<std::string>());
      }
    } else if (value.is_number()) {
      merged.push_back(flag);
      merged.push_back(value.dump());
    } else if (!value.is_null()) {
      throw DataError("config key \"" + key + "\" must be a scalar");
    }
  }
  return merged;
}

void emit_config(const json& config, const Common& common, const std::string& out_path,
                 std::ostream& err) {
  std::string path = common.config_out;
  if (path.empty() && !out_path.empty()) path = out_path + ".config.json";
  if (path.empty()) {
    err << "config: " << config.dump() << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw DataError("cannot write " + path);
  f << config.dump(2) << '\n';
}

json scores_to_json(const AspectScores& s) {
  return {{"f1", s.f1},
          {"rouge1", s.rouge1},
          {"rouge2", s.rouge2},
          {"rougeL", s.rouge_l},
          {"max_f1", s.max_f1},
          {"docs", s.docs},
          {"skipped_docs", s.skipped_docs},
          {"discarded_annotators", s.discarded_annotators},
          {"excluded_docs", s.excluded_docs}};
}

void print_eval_table(std::ostream& out, const EvalReport& report) {
  out << std::fixed << std::setprecision(2);
  out << std::left << std::setw(12) << "aspect" << std::right << std::setw(8) << "F1"
      << std::setw(8) << "R-1" << std::setw(8) << "R-2" << std::setw(8) << "R-L" << std::setw(8)
      << "Max" << std::setw(6) << "docs" << '\n';
  for (const auto& [label, s] : report.aspects) {
    out << std::left << std::setw(12) << (label.empty() ? "-" : label) << std::right
        << std::setw(8) << s.f1 << std::setw(8) << s.rouge1 << std::setw(8) << s.rouge2
        << std::setw(8) << s.rouge_l << std::setw(8) << s.max_f1 << std::setw(6) << s.docs
        << '\n';
  }
}

int cmd_retrieve(const RetrieveArgs& a, const Common& common, std::ostream& out,
                 std::ostream& err) {
  const auto corpus = load_corpus(a.corpus);
  const auto vectors = maybe_vectors(a.vectors);
  std::unique_ptr<SentenceEncoder> encoder;
  std::optional<IdfTable> idf;
  if (vectors) {
    encoder = std::make_unique<WordVectorEncoder>(*vectors);
  } else {
    if (corpus.empty()) throw DataError("retrieve: corpus is empty");
    idf = IdfTable::build(corpus);
    encoder = std::make_unique<TfidfEncoder>(*idf);
  }
  const auto ranked = retrieve_top(corpus, {a.exemplar, a.domain}, a.top, *encoder);
  json result = json::array();
  std::size_t zero_pairs = 0;
  for (const auto& r : ranked) {
    result.push_back({{"id", r.id}, {"score", r.score}});
    zero_pairs += r.zero_vector_pairs;
  }
  if (zero_pairs > 0) {
    err << "warning: " << zero_pairs
        << " sentence/exemplar pairs had a zero vector; their cosine counted as 0\n";
  }
  Sink sink(a.out, out);
  *sink << (common.pretty ? result.dump(2) : result.dump()) << '\n';
  emit_config({{"subcommand", "retrieve"},
               {"corpus", a.corpus},
               {"exemplar", a.exemplar},
               {"domain", a.domain},
               {"top", a.top},
               {"vectors", a.vectors},
               {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

int cmd_keywords(const KeywordsArgs& a, const Common& common, std::ostream& out,
                 std::ostream& err) {
  const auto corpus = load_corpus(a.corpus);
  if (corpus.empty()) throw DataError("keywords: corpus is empty");
  const auto idf = IdfTable::build(corpus);
  Sink sink(a.out, out);
  std::size_t skipped = 0;
  std::size_t empty = 0;
  for (const auto& doc : corpus.documents) {
    if (!doc.reference || doc.reference->empty()) {
      ++skipped;
      continue;
    }
    const auto k = extract_keywords(doc, idf, a.max_k);
    if (k.empty()) ++empty;
    *sink << json{{"id", doc.id}, {"keywords", k.keywords}}.dump() << '\n';
  }
  if (skipped > 0) err << "warning: skipped " << skipped << " documents without a summary\n";
  if (empty > 0) err << "warning: " << empty << " documents share no keyword with their summary\n";
  emit_config({{"subcommand", "keywords"}, {"corpus", a.corpus}, {"max-k", a.max_k}, {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

int cmd_build_training(const BuildTrainingArgs& a, const Common& common, std::ostream& out,
                       std::ostream& err) {
  TrainingConfig config;
  config.r = a.r;
  config.scorer = parse_scorer_kind(a.scorer);
  config.mixed = a.mixed;
  config.budget = a.budget;
  config.max_k = a.max_k;
  if (!(config.r > 0.0)) throw UsageError("--r must be positive");
  if (config.budget == 0 || config.max_k == 0) throw UsageError("--budget and --max-k must be >= 1");

  const auto corpus = load_corpus(a.corpus);
  const auto vectors = maybe_vectors(a.vectors);
  const auto set = build_training_set(corpus, config, ptr(vectors));
  {
    Sink sink(a.out, out);
    write_training_set(*sink, set.examples);
  }
  if (set.skipped_no_reference > 0) {
    err << "warning: skipped " << set.skipped_no_reference << " documents without a summary\n";
  }
  if (set.empty_keyword_docs > 0) {
    err << "warning: " << set.empty_keyword_docs
        << " documents yielded no keywords; only their keywordless example was kept\n";
  }
  emit_config({{"subcommand", "build-training"},
               {"corpus", a.corpus},
               {"r", a.r},
               {"scorer", a.scorer},
               {"vectors", a.vectors},
               {"mixed", a.mixed},
               {"budget", a.budget},
               {"max-k", a.max_k},
               {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

int cmd_train(const TrainArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const auto corpus = load_corpus(a.corpus);
  if (corpus.empty()) throw DataError("train: corpus is empty");
  const auto examples = load_training_set(a.training);
  if (examples.empty()) throw DataError("train: training file has no examples");
  const auto vectors = maybe_vectors(a.vectors);
  const auto idf = IdfTable::build(corpus);
  const auto model = train(examples, corpus, idf, ptr(vectors), a.hyper);
  {
    Sink sink(a.out, out);
    write_model(*sink, model);
  }
  err << "trained on " << examples.size() << " examples; final loss " << model.final_loss << '\n';
  emit_config({{"subcommand", "train"},
               {"training", a.training},
               {"corpus", a.corpus},
               {"vectors", a.vectors},
               {"lr", a.hyper.learning_rate},
               {"epochs", a.hyper.epochs},
               {"l2", a.hyper.l2},
               {"seed", a.hyper.seed},
               {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

std::vector<std::string> resolve_keywords(const SummarizeArgs& a) {
  if (!a.keywords.empty() && !a.aspects.empty()) {
    throw UsageError("give either --keywords or --aspects/--aspect, not both");
  }
  if (!a.aspects.empty()) {
    if (a.aspect.empty()) throw UsageError("--aspects needs --aspect LABEL");
    for (const auto& set : load_aspect_keywords(a.aspects)) {
      if (set.aspect_label == a.aspect) return set.keywords;
    }
    throw DataError("aspect \"" + a.aspect + "\" not found in " + a.aspects);
  }
  return normalize_keywords(split_list(a.keywords));
}

int cmd_summarize(const SummarizeArgs& a, const Common& common, std::ostream& out,
                  std::ostream& err) {
  if (a.model.empty() == a.baseline.empty()) {
    throw UsageError("summarize needs exactly one of --model or --baseline");
  }
  if (a.m == 0) throw UsageError("--m must be >= 1");
  const auto keywords = resolve_keywords(a);
  const auto corpus = load_corpus(a.corpus);
  const auto vectors = maybe_vectors(a.vectors);

  std::optional<ScorerModel> model;
  std::optional<IdfTable> idf;
  std::unique_ptr<SimilarityScorer> scorer;
  if (!a.model.empty()) {
    model = load_model(a.model);
    if (corpus.empty()) throw DataError("summarize: corpus is empty");
    idf = IdfTable::build(corpus);
  } else if (a.baseline == "keyword") {
    if (keywords.empty()) throw UsageError("--baseline keyword needs --keywords or --aspects");
  } else if (a.baseline == "stdref") {
    scorer = make_scorer(parse_scorer_kind(a.scorer), ptr(vectors));
  } else if (a.baseline != "lead") {
    throw UsageError("unknown baseline \"" + a.baseline + "\" (expected keyword, lead or stdref)");
  }

  Sink sink(a.out, out);
  std::size_t skipped = 0;
  for (const auto& doc : corpus.documents) {
    std::vector<std::size_t> indices;
    if (model) {
      indices = predict(*model, doc, keywords, *idf, ptr(vectors), a.m);
    } else if (a.baseline == "keyword") {
      indices = keyword_match_baseline(doc, keywords, a.m);
    } else if (a.baseline == "lead") {
      indices = lead_baseline(doc, a.m);
    } else {
      if (!doc.reference || tokenize(*doc.reference).empty()) {
        ++skipped;
        continue;
      }
      indices = std_ref_oracle(doc, *scorer, a.budget);
    }
    *sink << json{{"doc_id", doc.id}, {"indices", indices}, {"text", join_sentences(doc, indices)}}
                 .dump()
          << '\n';
  }
  if (skipped > 0) err << "warning: stdref skipped " << skipped << " documents without a summary\n";
  emit_config({{"subcommand", "summarize"},
               {"model", a.model},
               {"baseline", a.baseline},
               {"corpus", a.corpus},
               {"keywords", a.keywords},
               {"aspects", a.aspects},
               {"aspect", a.aspect},
               {"m", a.m},
               {"vectors", a.vectors},
               {"scorer", a.scorer},
               {"budget", a.budget},
               {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

int cmd_evaluate(const EvaluateArgs& a, const Common& common, std::ostream& out,
                 std::ostream& err) {
  if (a.m == 0) throw UsageError("--m must be >= 1");
  const auto predictions = load_predictions(a.pred);
  const auto records = load_annotations(a.annotations);
  const auto corpus = load_corpus(a.corpus);
  const auto report = evaluate(predictions, records, corpus, a.m,
                               a.aspect.empty() ? std::nullopt : std::optional(a.aspect));
  Sink sink(a.out, out);
  if (common.pretty) {
    print_eval_table(*sink, report);
  } else {
    json aspects = json::object();
    for (const auto& [label, s] : report.aspects) aspects[label] = scores_to_json(s);
    *sink << json{{"m", report.m}, {"aspects", aspects}}.dump() << '\n';
  }
  for (const auto& [label, s] : report.aspects) {
    if (s.skipped_docs > 0) {
      err << "warning: aspect \"" << label << "\": " << s.skipped_docs
          << " predicted documents have no usable annotations\n";
    }
  }
  emit_config({{"subcommand", "evaluate"},
               {"pred", a.pred},
               {"annotations", a.annotations},
               {"corpus", a.corpus},
               {"m", a.m},
               {"aspect", a.aspect},
               {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

int cmd_sensitivity(const SensitivityArgs& a, const Common& common, std::ostream& out,
                    std::ostream& err) {
  const auto report = sensitivity_report(load_predictions(a.pred_a), load_predictions(a.pred_b));
  Sink sink(a.out, out);
  if (common.pretty) {
    *sink << std::fixed << std::setprecision(3) << "docs     " << report.docs << '\n'
          << "jaccard  " << report.mean_jaccard << '\n'
          << "EM %     " << report.exact_match_pct << '\n';
  } else {
    *sink << json{{"docs", report.docs},
                  {"mean_jaccard", report.mean_jaccard},
                  {"exact_match_pct", report.exact_match_pct}}
                 .dump()
          << '\n';
  }
  emit_config({{"subcommand", "sensitivity"},
               {"pred-a", a.pred_a},
               {"pred-b", a.pred_b},
               {"out", a.out}},
              common, a.out, err);
  return kExitOk;
}

int cmd_synth(const SynthArgs& a, const Common& common, std::ostream& err) {
  if (a.docs == 0) throw UsageError("--docs must be >= 1");
  auto config = default_synth_config(a.seed, a.docs);
  config.discordant_annotator = a.discordant;
  const auto data = generate_synthetic(config);
  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  save_corpus(dir / "corpus.jsonl", data.corpus);
  {
    std::ofstream f(dir / "annotations.jsonl");
    if (!f) throw DataError("cannot write annotations.jsonl");
    write_annotations(f, data.annotations);
  }
  {
    std::ofstream f(dir / "aspects.json");
    if (!f) throw DataError("cannot write aspects.json");
    write_aspect_keywords(f, data.aspect_keywords);
  }
  if (!a.vectors_out.empty()) {
    std::ofstream f(a.vectors_out);
    if (!f) throw DataError("cannot write " + a.vectors_out);
    synthetic_embeddings(config).write(f);
  }
  emit_config({{"subcommand", "synth"},
               {"seed", a.seed},
               {"docs", a.docs},
               {"out-dir", a.out_dir},
               {"vectors-out", a.vectors_out},
               {"discordant", a.discordant}},
              common, "", err);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aspect-oriented extractive summarization toolkit", "aosumm"};
  app.require_subcommand(1);

  Common common;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "JSON file of defaults; explicit flags win");
    sub->add_option("--config-out", common.config_out, "Where to write the resolved config");
    sub->add_flag("--pretty", common.pretty, "Human-readable output");
  };

  RetrieveArgs ra;
  auto* retrieve = app.add_subcommand("retrieve", "Rank documents by similarity to an exemplar");
  retrieve->add_option("--corpus", ra.corpus, "Corpus JSONL")->required();
  retrieve->add_option("--exemplar", ra.exemplar, "Exemplar sentence");
  retrieve->add_option("--domain", ra.domain, "Domain label of the exemplar");
  retrieve->add_option("--top", ra.top, "Number of documents to keep")
      ->check(CLI::PositiveNumber);
  retrieve->add_option("--vectors", ra.vectors, "Word-vector file (averaged encoder)");
  retrieve->add_option("--out", ra.out, "Output JSON path");
  add_common(retrieve);

  KeywordsArgs ka;
  auto* keywords = app.add_subcommand("keywords", "Extract per-document training keywords");
  keywords->add_option("--corpus", ka.corpus, "Corpus JSONL")->required();
  keywords->add_option("--max-k", ka.max_k, "Keywords per document")->check(CLI::PositiveNumber);
  keywords->add_option("--out", ka.out, "Output JSONL path");
  add_common(keywords);

  BuildTrainingArgs ba;
  auto* build = app.add_subcommand("build-training", "Derive oracle labels for training");
  build->add_option("--corpus", ba.corpus, "Corpus JSONL")->required();
  build->add_option("--r", ba.r, "Keyword intensity");
  build->add_option("--scorer", ba.scorer, "rouge2 or embed")
      ->check(CLI::IsMember({"rouge2", "embed"}));
  build->add_option("--vectors", ba.vectors, "Word-vector file for the embed scorer");
  build->add_flag("--mixed", ba.mixed, "Also emit keywordless examples");
  build->add_option("--budget", ba.budget, "Oracle sentence budget");
  build->add_option("--max-k", ba.max_k, "Keywords per document");
  build->add_option("--out", ba.out, "Output JSONL path")->required();
  add_common(build);

  TrainArgs ta;
  auto* trainer = app.add_subcommand("train", "Train the sentence scorer");
  trainer->add_option("--training", ta.training, "Training JSONL")->required();
  trainer->add_option("--corpus", ta.corpus, "Corpus JSONL")->required();
  trainer->add_option("--out", ta.out, "Model JSON path")->required();
  trainer->add_option("--vectors", ta.vectors, "Word-vector file for keyword features");
  trainer->add_option("--lr", ta.hyper.learning_rate, "Learning rate");
  trainer->add_option("--epochs", ta.hyper.epochs, "Gradient-descent epochs");
  trainer->add_option("--l2", ta.hyper.l2, "L2 penalty");
  trainer->add_option("--seed", ta.hyper.seed, "Seed recorded with the model");
  add_common(trainer);

  SummarizeArgs sa;
  auto* summarize = app.add_subcommand("summarize", "Select summary sentences");
  summarize->add_option("--model", sa.model, "Model JSON");
  summarize->add_option("--baseline", sa.baseline, "keyword, lead or stdref");
  summarize->add_option("--corpus", sa.corpus, "Corpus JSONL")->required();
  summarize->add_option("--keywords", sa.keywords, "Comma-separated keywords");
  summarize->add_option("--aspects", sa.aspects, "Aspect keyword JSON");
  summarize->add_option("--aspect", sa.aspect, "Aspect label within --aspects");
  summarize->add_option("--m", sa.m, "Sentences per summary");
  summarize->add_option("--vectors", sa.vectors, "Word-vector file");
  summarize->add_option("--scorer", sa.scorer, "Scorer for the stdref baseline")
      ->check(CLI::IsMember({"rouge2", "embed"}));
  summarize->add_option("--budget", sa.budget, "Oracle budget for the stdref baseline");
  summarize->add_option("--out", sa.out, "Output JSONL path");
  add_common(summarize);

  EvaluateArgs ea;
  auto* evaluator = app.add_subcommand("evaluate", "Score predictions against annotations");
  evaluator->add_option("--pred", ea.pred, "Predictions JSONL")->required();
  evaluator->add_option("--annotations", ea.annotations, "Annotation JSONL")->required();
  evaluator->add_option("--corpus", ea.corpus, "Corpus JSONL (sentence text for ROUGE)")
      ->required();
  evaluator->add_option("--m", ea.m, "Summary size bound for max-F1");
  evaluator->add_option("--aspect", ea.aspect, "Only annotations with this aspect label");
  evaluator->add_option("--out", ea.out, "Output JSON path");
  add_common(evaluator);

  SensitivityArgs na;
  auto* sensitivity = app.add_subcommand("sensitivity", "Compare two prediction runs");
  sensitivity->add_option("--pred-a", na.pred_a, "First predictions JSONL")->required();
  sensitivity->add_option("--pred-b", na.pred_b, "Second predictions JSONL")->required();
  sensitivity->add_option("--out", na.out, "Output JSON path");
  add_common(sensitivity);

  SynthArgs ya;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic aspect corpus");
  synth->add_option("--seed", ya.seed, "Random seed");
  synth->add_option("--docs", ya.docs, "Number of documents");
  synth->add_option("--out-dir", ya.out_dir, "Output directory")->required();
  synth->add_option("--vectors-out", ya.vectors_out, "Also write synthetic word vectors here");
  synth->add_flag("--discordant", ya.discordant, "Add an annotator that filtering discards");
  add_common(synth);

  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  try {
    if (retrieve->parsed()) return cmd_retrieve(ra, common, out, err);
    if (keywords->parsed()) return cmd_keywords(ka, common, out, err);
    if (build->parsed()) return cmd_build_training(ba, common, out, err);
    if (trainer->parsed()) return cmd_train(ta, common, out, err);
    if (summarize->parsed()) return cmd_summarize(sa, common, out, err);
    if (evaluator->parsed()) return cmd_evaluate(ea, common, out, err);
    if (sensitivity->parsed()) return cmd_sensitivity(na, common, out, err);
    if (synth->parsed()) return cmd_synth(ya, common, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace aosumm::cli
