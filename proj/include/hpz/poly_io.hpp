#pragma once

// Canonical polynomial interchange format:
//   {"n": 2, "terms": [{"exp": [1,1], "coef": 1.0}, ...]}
// terms are written in graded-lex order so serialization is canonical.

#include <fstream>
#include <json.hpp>

#include "hpz/error.hpp"
#include "hpz/multipoly.hpp"

namespace hpz {

inline nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json j;
  j["n"] = p.n();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exp"] = e;
    t["coef"] = c;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

inline MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("terms"))
    throw InputError("polynomial json: missing 'n' or 'terms'");
  int n = j.at("n").get<int>();
  if (n < 1 || n > 6) throw InputError("polynomial json: n out of range [1,6]");
  MultiPoly p(n);
  size_t idx = 0;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("exp") || !t.contains("coef"))
      throw InputError("polynomial json: term " + std::to_string(idx) +
                       " missing 'exp' or 'coef'");
    Exponents e = t.at("exp").get<Exponents>();
    if (int(e.size()) != n)
      throw InputError("polynomial json: term " + std::to_string(idx) +
                       " exponent length != n");
    for (int a : e)
      if (a < 0)
        throw InputError("polynomial json: term " + std::to_string(idx) +
                         " has a negative exponent");
    p.add_term(e, t.at("coef").get<double>());
    ++idx;
  }
  return p;
}

inline void save_poly(const MultiPoly& p, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open for write: " + path);
  os << poly_to_json(p).dump(2) << "\n";
}

inline MultiPoly load_poly(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open polynomial file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
  return poly_from_json(j);
}

}  // namespace hpz
