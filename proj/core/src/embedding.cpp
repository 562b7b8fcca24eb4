#include "aosumm/embedding.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aosumm/corpus.hpp"

namespace aosumm {

EmbeddingTable EmbeddingTable::parse(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::vector<double> values;
    std::string field;
    while (fields >> field) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw DataError("vectors line " + std::to_string(line_no) + ": bad number \"" +
                        field + "\"");
      }
    }
    if (values.empty()) {
      throw DataError("vectors line " + std::to_string(line_no) + ": no components");
    }
    try {
      table.add(std::move(token), std::move(values));
    } catch (const std::invalid_argument& e) {
      throw DataError("vectors line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open vector file " + path.string());
  return parse(in);
}

void EmbeddingTable::add(std::string token, std::vector<double> vector) {
  if (dimension_ == 0) {
    dimension_ = vector.size();
  } else if (vector.size() != dimension_) {
    throw std::invalid_argument("vector for \"" + token + "\" has dimension " +
                                std::to_string(vector.size()) + ", expected " +
                                std::to_string(dimension_));
  }
  double norm = 0.0;
  for (double v : vector) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("vector for \"" + token + "\" is zero or non-finite");
  }
  for (double& v : vector) v /= norm;
  auto [it, inserted] = vectors_.insert_or_assign(std::move(token), std::move(vector));
  if (inserted) order_.push_back(it->first);
}

const std::vector<double>* EmbeddingTable::find(std::string_view token) const {
  auto it = vectors_.find(token);
  return it == vectors_.end() ? nullptr : &it->second;
}

double EmbeddingTable::similarity(std::string_view a, std::string_view b) const {
  if (a == b) return 1.0;
  const auto* u = find(a);
  const auto* v = find(b);
  if (u == nullptr || v == nullptr) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < u->size(); ++i) dot += (*u)[i] * (*v)[i];
  return dot;
}

void EmbeddingTable::write(std::ostream& out) const {
  std::ostringstream line;
  line.precision(9);
  for (const auto& token : order_) {
    line.str({});
    line << token;
    for (double v : vectors_.at(token)) line << ' ' << v;
    out << line.str() << '\n';
  }
}

}  // namespace aosumm
