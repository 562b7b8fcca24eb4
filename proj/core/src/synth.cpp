#include "aosumm/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace aosumm {

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// draws are derived from raw outputs to keep files identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::string frame(const std::string& first, const std::string& verb, const std::string& second) {
  return "The " + first + " " + verb + " near " + second + ".";
}

struct Pool {
  std::string label;
  const std::vector<std::string>* nouns;
  const std::vector<std::string>* verbs;
};

struct Drawn {
  std::string first;
  std::string verb;
  std::string second;

  std::string text() const { return frame(first, verb, second); }
};

Drawn draw_sentence(const Pool& pool, Rng& rng) {
  const auto& nouns = *pool.nouns;
  const std::size_t a = rng.below(nouns.size());
  std::size_t b = rng.below(nouns.size());
  if (nouns.size() > 1 && b == a) b = (b + 1 + rng.below(nouns.size() - 1)) % nouns.size();
  return {nouns[a], (*pool.verbs)[rng.below(pool.verbs->size())], nouns[b]};
}

void validate(const SynthConfig& config) {
  if (config.aspects.size() < 2) {
    throw std::invalid_argument("generate_synthetic: at least two aspects are required");
  }
  if (config.n_docs == 0) throw std::invalid_argument("generate_synthetic: n_docs must be >= 1");
  std::unordered_map<std::string, std::string> owner;
  for (const auto& w : synthetic_frame_words()) owner.emplace(w, "frame");
  const auto claim = [&](const std::vector<std::string>& tokens, const std::string& label) {
    for (const auto& t : tokens) {
      const auto normalized = tokenize(t);
      if (normalized.size() != 1 || normalized[0] != t) {
        throw std::invalid_argument("generate_synthetic: pool token \"" + t +
                                    "\" is not a single lowercase token");
      }
      auto [it, inserted] = owner.emplace(t, label);
      if (!inserted && it->second != label) {
        throw std::invalid_argument("generate_synthetic: token \"" + t + "\" appears in pools \"" +
                                    it->second + "\" and \"" + label + "\"");
      }
    }
  };
  for (const auto& a : config.aspects) {
    if (a.nouns.size() < 2 || a.verbs.empty()) {
      throw std::invalid_argument("generate_synthetic: aspect \"" + a.label +
                                  "\" needs at least two nouns and one verb");
    }
    if (a.min_sentences < 1 || a.min_sentences > a.max_sentences) {
      throw std::invalid_argument("generate_synthetic: bad sentence range for \"" + a.label + "\"");
    }
    if (a.keyword_count == 0 || a.keyword_count > a.nouns.size()) {
      throw std::invalid_argument("generate_synthetic: bad keyword_count for \"" + a.label + "\"");
    }
    claim(a.nouns, a.label);
    claim(a.verbs, a.label);
  }
  const auto& f = config.filler;
  if (f.nouns.size() < 2 || f.verbs.empty() || f.min_sentences > f.max_sentences) {
    throw std::invalid_argument("generate_synthetic: filler pool is incomplete");
  }
  if (config.discordant_annotator && f.min_sentences == 0) {
    throw std::invalid_argument(
        "generate_synthetic: a discordant annotator needs at least one filler sentence");
  }
  claim(f.nouns, std::string(kFillerLabel));
  claim(f.verbs, std::string(kFillerLabel));
}

}  // namespace

const std::vector<std::string>& synthetic_frame_words() {
  static const std::vector<std::string> words = {"the", "near"};
  return words;
}

std::vector<AspectSpec> default_aspects() {
  AspectSpec geo;
  geo.label = "geo";
  geo.prompt = "geography, region, or location";
  geo.nouns = {"region", "location", "country", "geography", "miles",   "coast",
               "province", "border",  "valley",  "mountain",  "epicenter", "island"};
  geo.verbs = {"spans", "borders", "surrounds", "lies", "stretches", "adjoins"};

  AspectSpec recv;
  recv.label = "recv";
  recv.prompt =
      "recovery and aid efforts (death toll and injuries, foreign/domestic government "
      "assistance, impact on survivors)";
  recv.nouns = {"recovery", "aid",      "survivor",  "injury", "death",   "rescuer",
                "shelter",  "hospital", "volunteer", "donation", "medic", "relief"};
  recv.verbs = {"reaches", "helps", "supports", "treats", "shelters", "feeds"};
  return {geo, recv};
}

FillerSpec default_filler() {
  FillerSpec f;
  f.nouns = {"official", "reporter", "statement", "weather", "market", "city",
             "school",   "team",     "crowd",     "photo",   "office", "evening"};
  f.verbs = {"said", "noted", "showed", "announced", "mentioned", "described"};
  return f;
}

SynthConfig default_synth_config(std::uint64_t seed, std::size_t n_docs) {
  SynthConfig c;
  c.seed = seed;
  c.n_docs = n_docs;
  c.aspects = default_aspects();
  c.filler = default_filler();
  return c;
}

SyntheticData generate_synthetic(const SynthConfig& config) {
  validate(config);
  Rng rng(config.seed);
  SyntheticData out;
  out.corpus.provenance = "synthetic:seed=" + std::to_string(config.seed);

  for (const auto& a : config.aspects) {
    KeywordSet k;
    k.aspect_label = a.label;
    k.prompt = a.prompt;
    k.keywords.assign(a.nouns.begin(),
                      a.nouns.begin() + static_cast<std::ptrdiff_t>(a.keyword_count));
    out.aspect_keywords.push_back(std::move(k));
  }

  const Pool filler{std::string(kFillerLabel), &config.filler.nouns, &config.filler.verbs};
  for (std::size_t d = 0; d < config.n_docs; ++d) {
    const std::string id = "synth-" + std::to_string(config.seed) + "-" + std::to_string(d);

    struct Slot {
      std::size_t pool;  // aspect index, or aspects.size() for filler
      Drawn words;
    };
    std::vector<Slot> slots;
    for (std::size_t a = 0; a < config.aspects.size(); ++a) {
      const auto& spec = config.aspects[a];
      const Pool pool{spec.label, &spec.nouns, &spec.verbs};
      const std::size_t count = rng.between(spec.min_sentences, spec.max_sentences);
      for (std::size_t k = 0; k < count; ++k) {
        slots.push_back({a, draw_sentence(pool, rng)});
      }
    }
    const std::size_t fillers =
        rng.between(config.filler.min_sentences, config.filler.max_sentences);
    for (std::size_t k = 0; k < fillers; ++k) {
      slots.push_back({config.aspects.size(), draw_sentence(filler, rng)});
    }
    rng.shuffle(slots);

    std::vector<std::string> texts;
    std::vector<std::string> labels;
    for (const auto& s : slots) {
      texts.push_back(s.words.text());
      labels.push_back(s.pool < config.aspects.size() ? config.aspects[s.pool].label
                                                      : std::string(kFillerLabel));
    }

    // Reference: one sentence per aspect paraphrasing a randomly chosen
    // aspect sentence. Only the object changes, and it is taken from nouns the
    // document does not use when there are any, so each reference sentence
    // points at a single source sentence.
    std::unordered_set<std::string> used;
    for (const auto& s : slots) {
      used.insert(s.words.first);
      used.insert(s.words.second);
    }
    std::string reference;
    for (std::size_t a = 0; a < config.aspects.size(); ++a) {
      const auto& spec = config.aspects[a];
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].pool == a) members.push_back(i);
      }
      const auto& anchor = slots[members[rng.below(members.size())]].words;
      std::vector<std::string> fresh;
      for (const auto& n : spec.nouns) {
        if (!used.contains(n)) fresh.push_back(n);
      }
      if (fresh.empty()) {
        for (const auto& n : spec.nouns) {
          if (n != anchor.first && n != anchor.second) fresh.push_back(n);
        }
      }
      const std::string object = fresh.empty() ? anchor.second : fresh[rng.below(fresh.size())];
      if (!reference.empty()) reference += ' ';
      reference += frame(anchor.first, anchor.verb, object);
    }

    for (std::size_t a = 0; a < config.aspects.size(); ++a) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].pool == a) members.push_back(i);
      }
      const std::size_t dropped =
          members.size() >= 2 ? members[rng.below(members.size())] : slots.size();
      for (int who = 1; who <= 3; ++who) {
        AnnotationRecord rec{id, "ann" + std::to_string(who), config.aspects[a].label,
                             std::vector<int>(slots.size(), 0)};
        for (auto i : members) {
          if (who == 3 && i == dropped) continue;
          rec.ratings[i] = 1 + static_cast<int>(rng.below(3));
        }
        out.annotations.push_back(std::move(rec));
      }
      if (config.discordant_annotator) {
        AnnotationRecord rec{id, "ann4", config.aspects[a].label,
                             std::vector<int>(slots.size(), 0)};
        for (std::size_t i = 0; i < slots.size(); ++i) {
          if (slots[i].pool == config.aspects.size()) {
            rec.ratings[i] = 1;
            break;
          }
        }
        out.annotations.push_back(std::move(rec));
      }
    }

    out.sentence_labels.emplace(id, std::move(labels));
    out.corpus.documents.push_back(make_document(id, texts, reference));
  }
  return out;
}

EmbeddingTable synthetic_embeddings(const SynthConfig& config, std::size_t dimension) {
  if (dimension == 0) throw std::invalid_argument("synthetic_embeddings: dimension must be >= 1");
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto random_vector = [&] {
    std::vector<double> v(dimension);
    for (double& x : v) x = 2.0 * rng.unit() - 1.0;
    return v;
  };
  EmbeddingTable table;
  const auto add_pool = [&](const std::vector<std::string>& nouns,
                            const std::vector<std::string>& verbs) {
    const auto base = random_vector();
    for (const auto* words : {&nouns, &verbs}) {
      for (const auto& w : *words) {
        auto noise = random_vector();
        for (std::size_t i = 0; i < dimension; ++i) noise[i] = base[i] + 0.35 * noise[i];
        table.add(w, std::move(noise));
      }
    }
  };
  for (const auto& a : config.aspects) add_pool(a.nouns, a.verbs);
  add_pool(config.filler.nouns, config.filler.verbs);
  return table;
}

}  // namespace aosumm
