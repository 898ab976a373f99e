#include "reslat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace reslat {

namespace {

using json = nlohmann::ordered_json;

Table table_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw MalformedAlgebra(std::string("missing table \"") + key + "\"");
  std::vector<std::vector<Elem>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw MalformedAlgebra(std::string("table \"") + key + "\" must be a list of lists");
    std::vector<Elem> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw MalformedAlgebra(std::string("non-integer entry in \"") + key + "\"");
      r.push_back(v.get<Elem>());
    }
    rows.push_back(std::move(r));
  }
  return Table::from_rows(rows);
}

}  // namespace

FinAlg algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedAlgebra(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedAlgebra("algebra file must hold a JSON object");
  FinAlg alg;
  try {
    if (j.contains("name") && j["name"].is_string()) alg.name = j["name"].get<std::string>();
    if (!j.contains("size") || !j["size"].is_number_integer()) throw MalformedAlgebra("missing integer \"size\"");
    if (!j.contains("unit") || !j["unit"].is_number_integer()) throw MalformedAlgebra("missing integer \"unit\"");
    alg.size = j["size"].get<int>();
    alg.unit = j["unit"].get<Elem>();
    if (j.contains("zero") && !j["zero"].is_null()) {
      if (!j["zero"].is_number_integer()) throw MalformedAlgebra("\"zero\" must be an integer or null");
      alg.zero = j["zero"].get<Elem>();
    }
  } catch (const json::exception& e) {
    throw MalformedAlgebra(e.what());
  }
  alg.join = table_field(j, "join");
  alg.meet = table_field(j, "meet");
  alg.prod = table_field(j, "prod");
  const bool has_l = j.contains("ldiv") && !j["ldiv"].is_null();
  const bool has_r = j.contains("rdiv") && !j["rdiv"].is_null();
  if (has_l && has_r) {
    alg.ldiv = table_field(j, "ldiv");
    alg.rdiv = table_field(j, "rdiv");
  }
  check_shape(alg);
  if (!alg.has_divisions()) alg = complete_divisions(std::move(alg));
  return alg;
}

FinAlg load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedAlgebra("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  FinAlg alg = algebra_from_json(ss.str());
  if (alg.name.empty()) alg.name = path.stem().string();
  return alg;
}

std::string algebra_to_json(const FinAlg& alg, const std::string& stamp) {
  json j;
  j["name"] = alg.name;
  j["size"] = alg.size;
  j["unit"] = alg.unit;
  j["zero"] = alg.zero ? json(*alg.zero) : json(nullptr);
  j["join"] = alg.join.rows();
  j["meet"] = alg.meet.rows();
  j["prod"] = alg.prod.rows();
  if (alg.has_divisions()) {
    j["ldiv"] = alg.ldiv.rows();
    j["rdiv"] = alg.rdiv.rows();
  }
  if (!stamp.empty()) j["stamp"] = stamp;
  return j.dump() + "\n";
}

void save_algebra(const FinAlg& alg, const std::filesystem::path& path, const std::string& stamp) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << algebra_to_json(alg, stamp);
}

}  // namespace reslat
