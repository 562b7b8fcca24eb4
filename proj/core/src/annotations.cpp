#include "aosumm/annotations.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "aosumm/corpus.hpp"
#include "json.hpp"

namespace aosumm {

using nlohmann::json;

std::vector<std::size_t> AnnotationRecord::selected() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    if (ratings[i] >= 1) out.push_back(i);
  }
  return out;
}

std::vector<AnnotationRecord> parse_annotations(std::istream& in) {
  std::vector<AnnotationRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const auto where = "annotations line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where + ": malformed JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("doc_id") || !obj["doc_id"].is_string() ||
        !obj.contains("annotator") || !obj["annotator"].is_string() ||
        !obj.contains("ratings") || !obj["ratings"].is_array()) {
      throw DataError(where + ": expected {\"doc_id\", \"annotator\", \"ratings\"}");
    }
    AnnotationRecord rec;
    rec.doc_id = obj["doc_id"].get<std::string>();
    rec.annotator_id = obj["annotator"].get<std::string>();
    if (auto a = obj.find("aspect"); a != obj.end() && a->is_string()) {
      rec.aspect = a->get<std::string>();
    }
    for (const auto& r : obj["ratings"]) {
      if (!r.is_number_integer()) throw DataError(where + ": ratings must be integers");
      const int v = r.get<int>();
      if (v < 0 || v > 3) {
        throw DataError(where + ": rating " + std::to_string(v) + " outside 0..3");
      }
      rec.ratings.push_back(v);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open annotation file " + path.string());
  return parse_annotations(in);
}

void write_annotations(std::ostream& out, const std::vector<AnnotationRecord>& records) {
  for (const auto& r : records) {
    json obj;
    obj["doc_id"] = r.doc_id;
    obj["annotator"] = r.annotator_id;
    if (!r.aspect.empty()) obj["aspect"] = r.aspect;
    obj["ratings"] = r.ratings;
    out << obj.dump() << '\n';
  }
}

}  // namespace aosumm
