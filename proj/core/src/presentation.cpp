#include "braidcalc/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace braidcalc {

using nlohmann::json;

Tensor Relation::full() const {
  Tensor t = quadratic + linear;
  t.add(Word{}, constant);
  return t;
}

int AlgebraPresentation::generator_index(std::string_view g) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == g) return static_cast<int>(i);
  return -1;
}

Subspace AlgebraPresentation::quadratic_space() const {
  std::vector<Tensor> q;
  q.reserve(relations.size());
  for (const auto& r : relations) q.push_back(r.quadratic);
  return echelonize(q, 2);
}

void AlgebraPresentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw Error("empty generator name");
    if (!seen.insert(g).second) throw Error("duplicate generator '" + g + "'");
  }
  auto check = [&](const Tensor& t, int degree, std::size_t idx, const char* part) {
    for (const auto& [w, c] : t.terms()) {
      if (static_cast<int>(w.size()) != degree)
        throw Error("relation " + std::to_string(idx + 1) + ": " + part + " part has a word of length " +
                    std::to_string(w.size()));
      for (int l : w)
        if (l < 0 || l >= size()) throw Error("relation " + std::to_string(idx + 1) + ": undeclared generator");
    }
  };
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].quadratic.is_zero())
      throw Error("relation " + std::to_string(i + 1) + " has a vanishing quadratic part");
    check(relations[i].quadratic, 2, i, "quadratic");
    check(relations[i].linear, 1, i, "linear");
  }
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error(where + ": unknown key '" + key + "'");
  }
}

std::string expect_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(where + ": expected a string");
  return v.get<std::string>();
}

Tensor parse_terms(const json& arr, const AlgebraPresentation& p, const ExprEnv& env, std::size_t length,
                   const std::string& where) {
  if (!arr.is_array()) throw Error(where + ": expected an array of terms");
  Tensor t;
  for (const auto& term : arr) {
    reject_unknown(term, {"word", "coeff"}, where);
    if (!term.contains("word") || !term.contains("coeff")) throw Error(where + ": term needs 'word' and 'coeff'");
    const json& w = term["word"];
    if (!w.is_array() || w.size() != length)
      throw Error(where + ": word must list " + std::to_string(length) + " generator(s)");
    Word word;
    for (const auto& g : w) {
      std::string name = expect_string(g, where);
      int idx = p.generator_index(name);
      if (idx < 0) throw Error(where + ": unknown generator '" + name + "'");
      word.push_back(idx);
    }
    t.add(word, parse_scalar_expr(expect_string(term["coeff"], where), env));
  }
  return t;
}

json dump_terms(const Tensor& t, const AlgebraPresentation& p) {
  json arr = json::array();
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    json word = json::array();
    for (int l : it->first) word.push_back(p.generators[static_cast<std::size_t>(l)]);
    arr.push_back(json{{"word", word}, {"coeff", it->second.to_string(p.symbol)}});
  }
  return arr;
}

}  // namespace

AlgebraPresentation parse_algebra_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown(doc, {"name", "symbol", "parameters", "generators", "relations"}, "algebra file");
  AlgebraPresentation p;
  if (!doc.contains("name")) throw Error("algebra file: missing 'name'");
  p.name = expect_string(doc["name"], "name");
  if (doc.contains("symbol")) p.symbol = expect_string(doc["symbol"], "symbol");
  ExprEnv env;
  env.symbol = p.symbol;
  if (doc.contains("parameters")) {
    const json& params = doc["parameters"];
    if (!params.is_object()) throw Error("parameters: expected an object");
    for (const auto& [key, value] : params.items()) {
      if (key == p.symbol) throw Error("parameter '" + key + "' shadows the symbol");
      p.parameters[key] = parse_scalar_expr(expect_string(value, "parameter " + key), ExprEnv{p.symbol, {}});
    }
  }
  env.parameters = p.parameters;
  if (!doc.contains("generators") || !doc["generators"].is_array()) throw Error("algebra file: missing 'generators'");
  for (const auto& g : doc["generators"]) p.generators.push_back(expect_string(g, "generators"));
  if (doc.contains("relations")) {
    const json& rels = doc["relations"];
    if (!rels.is_array()) throw Error("relations: expected an array");
    std::size_t i = 0;
    for (const auto& r : rels) {
      std::string where = "relation " + std::to_string(++i);
      reject_unknown(r, {"quadratic", "linear", "constant"}, where);
      Relation rel;
      if (!r.contains("quadratic")) throw Error(where + ": missing 'quadratic'");
      rel.quadratic = parse_terms(r["quadratic"], p, env, 2, where);
      if (r.contains("linear")) rel.linear = parse_terms(r["linear"], p, env, 1, where);
      if (r.contains("constant")) rel.constant = parse_scalar_expr(expect_string(r["constant"], where), env);
      p.relations.push_back(std::move(rel));
    }
  }
  p.validate();
  return p;
}

AlgebraPresentation load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str());
}

std::string serialize_algebra(const AlgebraPresentation& p) {
  json doc;
  doc["name"] = p.name;
  doc["symbol"] = p.symbol;
  json params = json::object();
  for (const auto& [k, v] : p.parameters) params[k] = v.to_string(p.symbol);
  doc["parameters"] = params;
  doc["generators"] = p.generators;
  json rels = json::array();
  for (const auto& r : p.relations) {
    json jr;
    jr["quadratic"] = dump_terms(r.quadratic, p);
    if (!r.linear.is_zero()) jr["linear"] = dump_terms(r.linear, p);
    if (!r.constant.is_zero()) jr["constant"] = r.constant.to_string(p.symbol);
    rels.push_back(std::move(jr));
  }
  doc["relations"] = rels;
  return doc.dump(2) + "\n";
}

}  // namespace braidcalc
