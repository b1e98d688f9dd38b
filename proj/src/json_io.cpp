#include "flagschur/json_io.hpp"

#include "flagschur/errors.hpp"

namespace flagschur::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("coefficient must be a string like \"3\" or \"-1/2\"");
  const std::string s = j.get<std::string>();
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational \"" + s + "\"");
  if (r.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

}  // namespace

Json to_json(const Rational& c) { return c.get_str(); }

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) j[std::to_string(it->first)] = it->second.get_str();
  return j;
}

Json to_json(const BiPoly& g) {
  Json j = Json::array();
  for (const auto& c : g.coeffs()) j.push_back(to_json(c));
  return j;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = m.n();
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const WeightVec& w) { return Json(w); }

Json to_json(const SchurElement& x) {
  Json j;
  j["n"] = x.n();
  j["d"] = x.d();
  j["basis"] = to_string(x.basis());
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json t;
    t["matrix"] = to_json(m);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const StableProduct& sp) {
  Json j = Json::array();
  for (const auto& t : sp.terms) {
    Json e;
    e["Z"] = to_json(t.z);
    e["G"] = to_json(t.g);
    if (t.den_pow > 0) e["den"] = t.den_pow;
    j.push_back(std::move(e));
  }
  return j;
}

Json to_json(const UElement& u) {
  Json j = Json::array();
  for (const auto& [key, c] : u.terms()) {
    Json e;
    e["hat"] = to_json(key.first);
    e["weight"] = to_json(key.second);
    e["scale"] = to_json(c);
    j.push_back(std::move(e));
  }
  return j;
}

Json specialized_to_json(const std::vector<std::pair<Matrix, LaurentPoly>>& terms) {
  Json j = Json::array();
  for (const auto& [z, c] : terms) {
    Json e;
    e["Z"] = to_json(z);
    e["G"] = to_json(c);
    j.push_back(std::move(e));
  }
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be an object {\"exp\": \"coeff\"}");
  LaurentPoly p;
  for (const auto& [k, val] : j.items()) {
    int e = 0;
    std::size_t used = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || k.empty()) throw ParseError("bad exponent \"" + k + "\"");
    p += LaurentPoly::monomial(rational_from(val), e);
  }
  return p;
}

BiPoly bipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("BiPoly must be an array of Laurent polynomials");
  std::vector<LaurentPoly> c;
  for (const auto& x : j) c.push_back(laurent_from_json(x));
  return BiPoly(std::move(c));
}

Matrix matrix_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& rows = field(j, "rows");
  if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("matrix needs n >= 1 rows");
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix row has wrong length");
    for (int k = 0; k < n; ++k) m(i, k) = as_int(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  return m;
}

WeightVec weight_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("weight must be an array of integers");
  WeightVec w;
  for (const auto& x : j) w.push_back(as_int(x, "weight entry"));
  return w;
}

SchurElement schur_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const int d = as_int(field(j, "d"), "d");
  Basis basis = Basis::E;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (b == "e") {
      basis = Basis::E;
    } else if (b == "bracket") {
      basis = Basis::Bracket;
    } else {
      throw ParseError("basis must be \"e\" or \"bracket\"");
    }
  }
  if (n < 1 || d < 0) throw ParseError("element needs n >= 1 and d >= 0");
  SchurElement x(n, d, basis);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  for (const auto& t : terms) {
    const Matrix m = matrix_from_json(field(t, "matrix"));
    if (m.n() != n || !is_theta(m) || m.total() != d) {
      throw ParseError("term matrix " + m.to_string() + " is not in Theta_" + std::to_string(d));
    }
    x.add(m, laurent_from_json(field(t, "coeff")));
  }
  return x;
}

StableQuery query_from_json(const Json& j) {
  const Json& f = j.is_array() ? j : field(j, "factors");
  if (!f.is_array() || f.empty()) throw ParseError("query needs a nonempty factor list");
  StableQuery q;
  for (const auto& m : f) q.factors.push_back(matrix_from_json(m));
  try {
    min_valid_shift(q);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return q;
}

UElement uelement_from_json(const Json& j) {
  // Either a nonempty symbol array, or {"n": n, "symbols": [...]} (which also covers zero).
  const Json& symbols = j.is_object() ? field(j, "symbols") : j;
  if (!symbols.is_array()) throw ParseError("UElement symbols must be an array");
  int n = 0;
  if (j.is_object()) {
    n = as_int(field(j, "n"), "n");
  } else if (!symbols.empty()) {
    n = matrix_from_json(field(symbols[0], "hat")).n();
  }
  if (n < 1) throw ParseError("UElement needs n >= 1 (use {\"n\": n, \"symbols\": []} for zero)");
  UElement u(n);
  for (const auto& s : symbols) {
    const Matrix h = matrix_from_json(field(s, "hat"));
    const WeightVec w = weight_from_json(field(s, "weight"));
    if (h.n() != u.n() || static_cast<int>(w.size()) != u.n() || !is_hat(h)) throw ParseError("bad formal symbol");
    u.add(h, w, laurent_from_json(field(s, "scale")));
  }
  return u;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace flagschur::json_io
