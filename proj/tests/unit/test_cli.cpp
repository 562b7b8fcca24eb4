#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aosumm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("aosumm_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == aosumm::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == aosumm::cli::kExitUsage);
  CHECK(run({"evaluate", "--pred", "p.jsonl", "--corpus", "c.jsonl"}).code ==
        aosumm::cli::kExitUsage);
  CHECK(run({"synth", "--out-dir", "x", "--bogus", "1"}).code == aosumm::cli::kExitUsage);
  CHECK(run({"--help"}).code == aosumm::cli::kExitOk);
}

TEST_CASE("data errors exit 2") {
  const auto dir = scratch("data");
  CHECK(run({"keywords", "--corpus", (dir / "missing.jsonl").string()}).code ==
        aosumm::cli::kExitData);
  std::ofstream(dir / "bad.jsonl") << "{not json\n";
  const auto r = run({"keywords", "--corpus", (dir / "bad.jsonl").string()});
  CHECK(r.code == aosumm::cli::kExitData);
  CHECK(r.err.find("line 1") != std::string::npos);
}

TEST_CASE("synth writes three files") {
  const auto dir = scratch("synth");
  const auto r = run({"synth", "--seed", "1", "--docs", "50", "--out-dir", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "corpus.jsonl"));
  CHECK(fs::exists(dir / "annotations.jsonl"));
  CHECK(fs::exists(dir / "aspects.json"));
  CHECK(r.err.find("config: ") != std::string::npos);
}

TEST_CASE("pipeline and config replay") {
  const auto dir = scratch("pipeline");
  const auto d = [&](const char* f) { return (dir / f).string(); };
  REQUIRE(run({"synth", "--seed", "3", "--docs", "20", "--out-dir", dir.string(),
               "--vectors-out", d("vec.txt")})
              .code == 0);

  const auto kw = run({"keywords", "--corpus", d("corpus.jsonl"), "--max-k", "3"});
  REQUIRE(kw.code == 0);
  const auto first = json::parse(kw.out.substr(0, kw.out.find('\n')));
  CHECK(first.contains("id"));
  CHECK(first.at("keywords").size() <= 3);

  REQUIRE(run({"build-training", "--corpus", d("corpus.jsonl"), "--scorer", "embed",
               "--vectors", d("vec.txt"), "--mixed", "--out", d("train.jsonl")})
              .code == 0);
  CHECK(fs::exists(d("train.jsonl") + ".config.json"));
  REQUIRE(run({"train", "--training", d("train.jsonl"), "--corpus", d("corpus.jsonl"),
               "--vectors", d("vec.txt"), "--epochs", "50", "--out", d("model.json")})
              .code == 0);
  REQUIRE(run({"summarize", "--model", d("model.json"), "--corpus", d("corpus.jsonl"),
               "--keywords", "region,location", "--vectors", d("vec.txt"), "--m", "2", "--out",
               d("pred.jsonl")})
              .code == 0);
  std::ifstream preds(d("pred.jsonl"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(preds, line)) {
    const auto j = json::parse(line);
    CHECK(j.at("indices").size() == 2);
    CHECK(j.at("text").is_string());
    ++n;
  }
  CHECK(n == 20);

  SUBCASE("replaying the emitted config reproduces the output") {
    const auto before = slurp(d("pred.jsonl"));
    fs::remove(d("pred.jsonl"));
    REQUIRE(run({"summarize", "--config", d("pred.jsonl") + ".config.json"}).code == 0);
    CHECK(slurp(d("pred.jsonl")) == before);
  }
  SUBCASE("explicit flags win over the config") {
    REQUIRE(run({"summarize", "--config", d("pred.jsonl") + ".config.json", "--m", "1", "--out",
                 d("pred1.jsonl")})
                .code == 0);
    std::ifstream in(d("pred1.jsonl"));
    std::getline(in, line);
    CHECK(json::parse(line).at("indices").size() == 1);
  }
  SUBCASE("evaluate and sensitivity") {
    const auto ev = run({"evaluate", "--pred", d("pred.jsonl"), "--annotations",
                         d("annotations.jsonl"), "--corpus", d("corpus.jsonl"), "--m", "2"});
    REQUIRE(ev.code == 0);
    const auto report = json::parse(ev.out);
    CHECK(report.at("m") == 2);
    for (const auto& [label, s] : report.at("aspects").items()) {
      for (const char* key : {"f1", "rouge1", "rouge2", "rougeL", "max_f1"}) {
        CHECK(s.at(key).get<double>() >= 0.0);
        CHECK(s.at(key).get<double>() <= 100.0);
      }
      CHECK(s.at("f1").get<double>() <= s.at("max_f1").get<double>() + 1e-9);
    }
    const auto se = run({"sensitivity", "--pred-a", d("pred.jsonl"), "--pred-b", d("pred.jsonl")});
    REQUIRE(se.code == 0);
    const auto sj = json::parse(se.out);
    CHECK(sj.at("mean_jaccard") == 1.0);
    CHECK(sj.at("exact_match_pct") == 100.0);

    const auto pretty = run({"evaluate", "--pred", d("pred.jsonl"), "--annotations",
                             d("annotations.jsonl"), "--corpus", d("corpus.jsonl"), "--pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("R-L") != std::string::npos);
  }
  SUBCASE("baselines") {
    for (const char* b : {"keyword", "lead", "stdref"}) {
      const auto r = run({"summarize", "--baseline", b, "--corpus", d("corpus.jsonl"),
                          "--aspects", d("aspects.json"), "--aspect", "geo"});
      CHECK(r.code == 0);
      CHECK(json::parse(r.out.substr(0, r.out.find('\n'))).at("indices").size() <= 3);
    }
  }
  SUBCASE("retrieve") {
    const auto r = run({"retrieve", "--corpus", d("corpus.jsonl"), "--exemplar",
                        "The region lies near the coast.", "--top", "5"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.size() == 5);
    CHECK(j[0].at("score").get<double>() >= j[4].at("score").get<double>());
  }
}
