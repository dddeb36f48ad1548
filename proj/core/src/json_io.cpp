#include "pbzl/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pbzl {

nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::ordered_json doc;
  doc["name"] = a.name();
  doc["size"] = a.size();
  auto rows = nlohmann::ordered_json::array();
  for (Element x = 0; x < a.size(); ++x) {
    auto row = nlohmann::ordered_json::array();
    for (Element y = 0; y < a.size(); ++y) row.push_back(a.leq(x, y) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  doc["leq"] = std::move(rows);
  doc["prime"] = a.prime_table();
  if (a.has_tilde())
    doc["tilde"] = a.tilde_table();
  else
    doc["tilde"] = nullptr;
  return doc;
}

FiniteAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw AlgebraError(ErrorCode::BadInput, "algebra document must be a JSON object");
  for (const char* key : {"name", "size", "leq", "prime"})
    if (!doc.contains(key)) throw AlgebraError(ErrorCode::BadInput, std::string("missing field \"") + key + "\"");

  const std::string name = doc["name"].get<std::string>();
  const int n = doc["size"].get<int>();
  if (n < 1) throw AlgebraError(ErrorCode::BadInput, "size must be positive");
  if (!doc["leq"].is_array() || static_cast<int>(doc["leq"].size()) != n)
    throw AlgebraError(ErrorCode::BadInput, "leq must have exactly `size` rows");

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    const auto& row = doc["leq"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw AlgebraError(ErrorCode::BadInput, "leq row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      const int bit = row[j].get<int>();
      if (bit != 0 && bit != 1)
        throw AlgebraError(ErrorCode::BadInput, "leq entries must be 0 or 1");
      leq[i][j] = bit == 1;
    }
  }

  std::vector<Element> prime = doc["prime"].get<std::vector<Element>>();
  std::optional<std::vector<Element>> tilde;
  if (doc.contains("tilde") && !doc["tilde"].is_null())
    tilde = doc["tilde"].get<std::vector<Element>>();
  return validate(name, leq, prime, tilde);
}

FiniteAlgebra read_algebra(std::istream& in, const std::string& origin) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(ErrorCode::BadInput, origin + ": " + e.what());
  }
  return algebra_from_json(doc);
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError(ErrorCode::BadInput, "cannot open " + path);
  return read_algebra(in, path);
}

}  // namespace pbzl
