#include <numeric>
#include <random>
#include <sstream>

#include "aosumm/eval.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace aosumm;
using aosumm::testing::corpus_of;
using aosumm::testing::doc_of;

namespace {

AnnotationRecord rec(std::string ann, std::vector<std::size_t> sel, std::size_t n = 10,
                     std::string doc = "d", std::string aspect = "") {
  AnnotationRecord r{std::move(doc), std::move(ann), std::move(aspect), std::vector<int>(n, 0)};
  for (auto i : sel) r.ratings.at(i) = 2;
  return r;
}

AnnotationSet set_of(std::vector<std::vector<std::size_t>> sels, std::size_t n = 10) {
  AnnotationSet s;
  s.doc_id = "d";
  for (std::size_t a = 0; a < sels.size(); ++a) {
    s.records.push_back(rec("a" + std::to_string(a), sels[a], n));
  }
  return s;
}

std::vector<std::string> ids(const AnnotationSet& s) {
  std::vector<std::string> out;
  for (const auto& r : s.records) out.push_back(r.annotator_id);
  return out;
}

}  // namespace

TEST_CASE("filter_annotations") {
  const std::vector<AnnotationRecord> abc{rec("A", {1, 2}), rec("B", {2, 3}), rec("C", {7})};
  const auto kept = filter_annotations(abc);
  REQUIRE(kept);
  CHECK(ids(*kept) == std::vector<std::string>{"A", "B"});
  CHECK(kept->discarded == 1);

  // Idempotent.
  const auto again = filter_annotations(kept->records);
  REQUIRE(again);
  CHECK(again->records == kept->records);
  CHECK(again->discarded == 0);

  const std::vector<AnnotationRecord> single{rec("A", {4})};
  CHECK(filter_annotations(single)->records.size() == 1);

  const std::vector<AnnotationRecord> same{rec("A", {1}), rec("B", {1})};
  CHECK(filter_annotations(same)->records.size() == 2);

  const std::vector<AnnotationRecord> disjoint{rec("A", {1}), rec("B", {2})};
  CHECK_FALSE(filter_annotations(disjoint).has_value());

  const std::vector<AnnotationRecord> mixed_docs{rec("A", {1}), rec("B", {1}, 10, "other")};
  CHECK_THROWS_AS(filter_annotations(mixed_docs), DataError);
  const std::vector<AnnotationRecord> mixed_len{rec("A", {1}), rec("B", {1}, 9)};
  CHECK_THROWS_AS(filter_annotations(mixed_len), DataError);
  CHECK_THROWS_AS(filter_annotations(std::span<const AnnotationRecord>{}), std::invalid_argument);
}

TEST_CASE("group_and_filter") {
  const std::vector<AnnotationRecord> recs{
      rec("A", {1, 2}, 10, "x", "geo"), rec("B", {2}, 10, "x", "geo"),
      rec("C", {7}, 10, "x", "geo"),    rec("A", {0}, 10, "y", "geo"),
      rec("B", {5}, 10, "y", "geo"),    rec("A", {3}, 10, "x", "recv")};
  const auto out = group_and_filter(recs);
  REQUIRE(out.sets.size() == 2);
  CHECK(out.sets[0].doc_id == "x");
  CHECK(out.sets[0].aspect == "geo");
  CHECK(out.sets[1].aspect == "recv");
  CHECK(out.discarded_annotators == 3);
  REQUIRE(out.excluded.size() == 1);
  CHECK(out.excluded[0].doc_id == "y");
}

TEST_CASE("f1_soft") {
  CHECK(f1_soft(IndexSet{1, 2}, set_of({{1, 2}})) == doctest::Approx(100.0));
  CHECK(f1_soft(IndexSet{1}, set_of({{1}, {2}})) == doctest::Approx(50.0));
  CHECK(f1_soft(IndexSet{1, 2, 3}, set_of({{2, 3, 4}})) ==
        doctest::Approx(200.0 / 3.0).epsilon(1e-12));
  CHECK(f1_soft(IndexSet{1, 2, 3}, set_of({{2, 3, 4}})) == doctest::Approx(66.67).epsilon(1e-4));
  CHECK(f1_soft(IndexSet{}, set_of({{1}})) == 0.0);
  CHECK(set_f1(IndexSet{}, IndexSet{}) == 100.0);
  CHECK_THROWS_AS(f1_soft(IndexSet{10}, set_of({{1}})), std::invalid_argument);
}

TEST_CASE("max_f1") {
  CHECK(max_f1(set_of({{1, 2}, {1, 2}, {1, 2}}), 2, 10) == doctest::Approx(100.0));
  CHECK(max_f1(set_of({{1}, {2}}), 1, 10) == doctest::Approx(50.0));
  CHECK(max_f1(set_of({{1}, {2}}), 2, 10) == doctest::Approx(200.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(max_f1(set_of({{1}}, 21), 3, 21), std::invalid_argument);

  SUBCASE("bounds every prediction of that size") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::vector<std::size_t>> sels(1 + rng() % 4);
      for (auto& s : sels) {
        for (std::size_t i = 0; i < 8; ++i) {
          if (rng() % 3 == 0) s.push_back(i);
        }
      }
      const auto ann = set_of(sels, 8);
      IndexSet pred;
      for (std::size_t i = 0; i < 8; ++i) {
        if (rng() % 3 == 0) pred.push_back(i);
      }
      if (pred.empty()) continue;
      CHECK(f1_soft(pred, ann) <= max_f1(ann, pred.size(), 8) + 1e-9);
    }
  }
}

TEST_CASE("jaccard and sensitivity") {
  CHECK(jaccard(IndexSet{1, 2}, IndexSet{1, 2}) == 1.0);
  CHECK(jaccard(IndexSet{1, 2}, IndexSet{3, 4}) == 0.0);
  CHECK(jaccard(IndexSet{1, 2, 3}, IndexSet{2, 3, 4}) == doctest::Approx(0.5));
  CHECK(jaccard(IndexSet{}, IndexSet{}) == 1.0);
  CHECK(jaccard(IndexSet{1}, IndexSet{1, 2}) == jaccard(IndexSet{1, 2}, IndexSet{1}));

  const Predictions a{{"x", {1, 2}}, {"y", {3}}};
  const Predictions b{{"x", {4, 5}}, {"y", {6}}};
  const Predictions half{{"x", {1, 2}}, {"y", {6}}};
  const auto same = sensitivity_report(a, a);
  CHECK(same.mean_jaccard == 1.0);
  CHECK(same.exact_match_pct == 100.0);
  CHECK(same.docs == 2);
  const auto diff = sensitivity_report(a, b);
  CHECK(diff.mean_jaccard == 0.0);
  CHECK(diff.exact_match_pct == 0.0);
  const auto mid = sensitivity_report(a, half);
  CHECK(mid.mean_jaccard == doctest::Approx(0.5));
  CHECK(mid.exact_match_pct == doctest::Approx(50.0));
  CHECK_THROWS_AS(sensitivity_report(a, Predictions{{"x", {1}}}), std::invalid_argument);
}

TEST_CASE("agreement_histogram") {
  auto hist = [](std::vector<std::vector<std::size_t>> sels) {
    const std::vector<AnnotationSet> sets{set_of(std::move(sels))};
    return agreement_histogram(sets);
  };
  CHECK(hist({{1}, {1}, {1}}) == std::vector<double>{0.0, 0.0, 100.0});
  CHECK(hist({{1}, {2}, {3}}) == std::vector<double>{100.0, 0.0, 0.0});
  CHECK(hist({{1, 2}, {1}, {1}}) == std::vector<double>{50.0, 0.0, 50.0});
  const auto h = hist({{1, 2, 5}, {1, 5}, {2, 3}, {5}});
  CHECK(std::accumulate(h.begin(), h.end(), 0.0) == doctest::Approx(100.0).epsilon(1e-11));
}

TEST_CASE("evaluate") {
  const auto corpus =
      corpus_of({doc_of("d", {"a b.", "c d.", "e f.", "g h."}), doc_of("u", {"x y."})});
  const std::vector<AnnotationRecord> recs{rec("A", {0, 1}, 4), rec("B", {1, 2}, 4)};

  SUBCASE("worked toy case") {
    const auto report = evaluate(Predictions{{"d", {0, 1}}, {"u", {0}}}, recs, corpus, 2);
    REQUIRE(report.aspects.count(""));
    const auto& s = report.aspects.at("");
    CHECK(s.docs == 1);
    CHECK(s.skipped_docs == 1);
    // Annotator A: exact match. B: half the sentences overlap.
    CHECK(s.f1 == doctest::Approx(75.0));
    CHECK(s.rouge1 == doctest::Approx(75.0));
    CHECK(s.rouge2 == doctest::Approx((100.0 + 100.0 / 3.0) / 2.0));
    CHECK(s.rouge_l == doctest::Approx(75.0));
    CHECK(s.max_f1 == doctest::Approx(75.0));
    CHECK(s.f1 <= s.max_f1 + 1e-9);
  }
  SUBCASE("unanimous prediction scores 100") {
    const std::vector<AnnotationRecord> same{rec("A", {1, 3}, 4), rec("B", {1, 3}, 4)};
    const auto& s = evaluate(Predictions{{"d", {1, 3}}}, same, corpus, 2).aspects.at("");
    CHECK(s.f1 == doctest::Approx(100.0));
    CHECK(s.rouge1 == doctest::Approx(100.0));
    CHECK(s.rouge2 == doctest::Approx(100.0));
    CHECK(s.rouge_l == doctest::Approx(100.0));
  }
  SUBCASE("empty predictions score 0") {
    const auto& s = evaluate(Predictions{{"d", {}}}, recs, corpus, 2).aspects.at("");
    CHECK(s.f1 == 0.0);
  }
  SUBCASE("aspect filter") {
    std::vector<AnnotationRecord> tagged{rec("A", {0}, 4, "d", "geo"),
                                         rec("A", {3}, 4, "d", "recv")};
    const auto report = evaluate(Predictions{{"d", {0}}}, tagged, corpus, 1, "geo");
    CHECK(report.aspects.size() == 1);
    CHECK(report.aspects.at("geo").f1 == doctest::Approx(100.0));
  }
}

TEST_CASE("parse_predictions") {
  std::istringstream in(
      "{\"doc_id\":\"a\",\"indices\":[0,2],\"text\":\"ignored\"}\n\n{\"doc_id\":\"b\",\"indices\":[]}\n");
  const auto p = parse_predictions(in);
  CHECK(p.at("a") == IndexSet{0, 2});
  CHECK(p.at("b").empty());
  std::istringstream bad("{\"doc_id\":\"a\"}\n");
  CHECK_THROWS_AS(parse_predictions(bad), DataError);
}
