#include "nilcoh/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nilcoh {

using json = nlohmann::json;

namespace {

Field parse_field(const json& j) {
  require(j.is_object() && j.contains("type"), error::code::parse, "field entry must be an object with a type");
  std::string t = j.at("type").get<std::string>();
  if (t == "rational") return Field::rationals();
  if (t == "prime") {
    require(j.contains("p") && j.at("p").is_number_integer(), error::code::parse,
            "prime field needs an integer p");
    return Field::prime(j.at("p").get<long>());
  }
  throw error(error::code::parse, "unknown field type '" + t + "'");
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(error::code::parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    require(j.is_object(), error::code::parse, "top level must be an object");
    std::string name = j.value("name", "");
    Field f = parse_field(j.at("field"));
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    require(basis.size() == dim, error::code::parse, "basis label count must equal dim");
    std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets;
    for (const json& b : j.value("brackets", json::array())) {
      std::size_t i = b.at("i").get<std::size_t>();
      std::size_t jj = b.at("j").get<std::size_t>();
      SparseVec sv;
      for (const auto& [key, val] : b.at("coeffs").items()) {
        std::size_t idx = std::stoul(key);
        sv.emplace_back(idx, Scalar::parse(f, val.get<std::string>()));
      }
      brackets.emplace_back(i, jj, std::move(sv));
    }
    auto alg = std::make_shared<const LieAlgebra>(f, std::move(basis), std::move(brackets));
    return AlgebraFile{std::move(name), std::move(alg)};
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    throw error(error::code::parse, std::string("malformed algebra file: ") + e.what());
  }
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), error::code::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

std::string algebra_to_json(const std::string& name, const LieAlgebra& g) {
  json j;
  j["name"] = name;
  if (g.field().is_rational())
    j["field"] = {{"type", "rational"}};
  else
    j["field"] = {{"type", "prime"}, {"p", g.field().p()}};
  j["dim"] = g.dim();
  j["basis"] = g.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      const SparseVec& sv = g.bracket_basis_upper(i, jj);
      if (sv.empty()) continue;
      json coeffs = json::object();
      for (const auto& [k, s] : sv) coeffs[std::to_string(k)] = s.str();
      brackets.push_back({{"i", i}, {"j", jj}, {"coeffs", std::move(coeffs)}});
    }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

void write_algebra_file(const std::string& path, const std::string& name, const LieAlgebra& g) {
  std::ofstream out(path);
  require(out.good(), error::code::parse, "cannot write '" + path + "'");
  out << algebra_to_json(name, g);
}

}  // namespace nilcoh
