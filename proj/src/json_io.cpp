#include "pdda/json_io.hpp"

#include <json.hpp>

#include "pdda/poly_io.hpp"

namespace pdda {

using ordered_json = nlohmann::ordered_json;

namespace {

int parse_var_key(const std::string& key, int n) {
  if (key.size() < 2 || (key[0] != 'X' && key[0] != 'T'))
    throw value_error("bad variable key: " + key);
  int index = 0;
  try {
    index = std::stoi(key.substr(1));
  } catch (const std::exception&) {
    throw value_error("bad variable key: " + key);
  }
  if (index < 1 || index > n) throw value_error("variable key out of range: " + key);
  return index - 1;
}

FieldSpec parse_field(const ordered_json& j) {
  if (!j.is_object() || !j.contains("type")) throw value_error("malformed field spec");
  std::string type = j.at("type").get<std::string>();
  if (type == "Q") return rationals();
  if (type == "Fp") {
    if (!j.contains("p")) throw value_error("Fp field needs a prime p");
    return prime_field(j.at("p").get<unsigned long>());
  }
  throw value_error("unknown field type: " + type);
}

}  // namespace

PoissonPresentation parse_presentation(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed presentation document: ") + e.what());
  }
  if (!doc.is_object()) throw value_error("presentation document must be an object");

  FieldSpec field = parse_field(doc.contains("field") ? doc.at("field") : ordered_json{{"type", "Q"}});
  if (!doc.contains("n")) throw value_error("presentation document lacks n");
  int n = doc.at("n").get<int>();
  if (n < 1) throw value_error("presentation needs at least one variable");

  PoissonPresentation pres(field, n);

  if (doc.contains("names")) {
    const auto& names = doc.at("names");
    if (!names.is_array() || static_cast<int>(names.size()) != n)
      throw value_error("names must list one name per variable");
    for (int v = 0; v < n; ++v) pres.names[static_cast<std::size_t>(v)] = names[static_cast<std::size_t>(v)].get<std::string>();
  }

  if (!doc.contains("lambda")) throw value_error("presentation document lacks lambda");
  const auto& lam = doc.at("lambda");
  if (!lam.is_array() || static_cast<int>(lam.size()) != n)
    throw value_error("lambda must be an n x n array");
  for (int i = 0; i < n; ++i) {
    const auto& row = lam[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw value_error("lambda must be an n x n array");
    for (int j = 0; j < n; ++j)
      pres.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Scalar::parse(row[static_cast<std::size_t>(j)].get<std::string>(), field);
  }

  if (doc.contains("delta")) {
    for (const auto& entry : doc.at("delta")) {
      int i = parse_var_key("X" + std::to_string(entry.at("i").get<int>()), n);
      for (const auto& [key, val] : entry.at("images").items()) {
        int j = parse_var_key(key, n);
        pres.set_delta(i, j, parse_polynomial(val.get<std::string>(), field, n, false));
      }
    }
  }

  if (doc.contains("eta")) {
    for (const auto& entry : doc.at("eta")) {
      int i = parse_var_key("X" + std::to_string(entry.at("i").get<int>()), n);
      Scalar value = Scalar::parse(entry.at("value").get<std::string>(), field);
      if (value.is_zero()) throw value_error("eta is zero");
      pres.eta[static_cast<std::size_t>(i)] = value;
    }
  }

  if (doc.contains("higher")) {
    for (const auto& entry : doc.at("higher")) {
      int i = parse_var_key("X" + std::to_string(entry.at("i").get<int>()), n);
      int bound = entry.at("bound").get<int>();
      if (bound < 1) throw value_error("higher table bound must be positive");
      std::vector<std::vector<Polynomial>> rows(
          static_cast<std::size_t>(bound),
          std::vector<Polynomial>(static_cast<std::size_t>(i), Polynomial::zero(field, n)));
      for (int j = 0; j < i; ++j) rows[0][static_cast<std::size_t>(j)] = pres.var(j);
      if (entry.contains("entries")) {
        for (const auto& row : entry.at("entries")) {
          int k = row.at("k").get<int>();
          if (k < 1 || k >= bound) throw value_error("higher table index outside the bound");
          for (const auto& [key, val] : row.at("images").items()) {
            int j = parse_var_key(key, n);
            if (j >= i) throw value_error("higher table references a later variable");
            rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                parse_polynomial(val.get<std::string>(), field, n, false);
          }
        }
      }
      pres.higher[static_cast<std::size_t>(i)] =
          HigherDerivationTable(i, bound, std::move(rows));
    }
  }

  if (doc.contains("nilpotence_cap")) pres.nilpotence_cap = doc.at("nilpotence_cap").get<int>();

  pres.validate_structure();
  return pres;
}

std::string serialize_presentation(const PoissonPresentation& pres) {
  ordered_json doc;
  if (pres.field.is_rational())
    doc["field"] = {{"type", "Q"}};
  else
    doc["field"] = {{"type", "Fp"}, {"p", pres.field.p}};
  doc["n"] = pres.n;
  doc["names"] = pres.names;

  ordered_json lam = ordered_json::array();
  for (int i = 0; i < pres.n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < pres.n; ++j)
      row.push_back(pres.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str());
    lam.push_back(std::move(row));
  }
  doc["lambda"] = std::move(lam);

  ordered_json delta = ordered_json::array();
  for (int i = 0; i < pres.n; ++i) {
    if (pres.delta_is_zero(i)) continue;
    ordered_json images;
    for (int j = 0; j < pres.n; ++j) {
      const Polynomial& img = pres.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!img.is_zero()) images["X" + std::to_string(j + 1)] = to_string(img);
    }
    delta.push_back({{"i", i + 1}, {"images", std::move(images)}});
  }
  if (!delta.empty()) doc["delta"] = std::move(delta);

  ordered_json eta = ordered_json::array();
  for (int i = 0; i < pres.n; ++i)
    if (pres.eta[static_cast<std::size_t>(i)])
      eta.push_back({{"i", i + 1}, {"value", pres.eta[static_cast<std::size_t>(i)]->str()}});
  if (!eta.empty()) doc["eta"] = std::move(eta);

  ordered_json higher = ordered_json::array();
  for (int i = 0; i < pres.n; ++i) {
    if (!pres.higher[static_cast<std::size_t>(i)]) continue;
    const HigherDerivationTable& table = *pres.higher[static_cast<std::size_t>(i)];
    ordered_json entries = ordered_json::array();
    for (int k = 1; k < table.bound(); ++k) {
      ordered_json images;
      for (int j = 0; j < i; ++j) {
        Polynomial img = table.image(k, j);
        if (!img.is_zero()) images["X" + std::to_string(j + 1)] = to_string(img);
      }
      entries.push_back({{"k", k}, {"images", std::move(images)}});
    }
    higher.push_back({{"i", i + 1}, {"bound", table.bound()}, {"entries", std::move(entries)}});
  }
  if (!higher.empty()) doc["higher"] = std::move(higher);

  doc["nilpotence_cap"] = pres.nilpotence_cap;
  return doc.dump(2);
}

}  // namespace pdda
