#include "sugawara/serialize.hpp"

#include <limits>

namespace sugawara {

namespace {

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SerializationError("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) throw SerializationError(std::string("missing key \"") + key + "\"", where);
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SerializationError("expected an array", where);
  return j;
}

int int_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SerializationError("expected an integer", where);
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw SerializationError("integer out of range", where);
  return static_cast<int>(v);
}

Rational rational_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SerializationError("expected a rational string \"p/q\"", where);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SerializationError(e.what(), where);
  }
}

Json generator_json(const Generator& g) {
  if (g.is_tau()) return "tau";
  return Json{{"e", Json::array({g.row(), g.col(), g.mode()})}};
}

Generator generator_from(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "tau") return Generator::tau();
    throw SerializationError("unknown generator \"" + j.get<std::string>() + "\"", where);
  }
  const Json& e = array_at(member(j, "e", where), pointer(where, "e"));
  if (e.size() != 3) throw SerializationError("generator needs [i, j, r]", pointer(where, "e"));
  const int i = int_at(e[0], pointer(where, "e/0"));
  const int c = int_at(e[1], pointer(where, "e/1"));
  const int r = int_at(e[2], pointer(where, "e/2"));
  try {
    return Generator::e(i, c, r);
  } catch (const std::exception& ex) {
    throw SerializationError(ex.what(), pointer(where, "e"));
  }
}

}  // namespace

Json to_json(const NcElement& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) {
    Json word = Json::array();
    for (const auto& g : t.word) word.push_back(generator_json(g));
    terms.push_back({{"coeff", t.coeff.to_string()}, {"kdeg", t.kdeg}, {"word", std::move(word)}});
  }
  return {{"terms", std::move(terms)}};
}

NcElement nc_element_from_json(const Json& j) {
  const Json& terms = array_at(member(j, "terms", ""), "/terms");
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = pointer("/terms", k);
    Term t;
    t.coeff = rational_at(member(terms[k], "coeff", where), pointer(where, "coeff"));
    t.kdeg = int_at(member(terms[k], "kdeg", where), pointer(where, "kdeg"));
    if (t.kdeg < 0) throw SerializationError("negative K-degree", pointer(where, "kdeg"));
    const Json& word = array_at(member(terms[k], "word", where), pointer(where, "word"));
    for (std::size_t g = 0; g < word.size(); ++g)
      t.word.push_back(generator_from(word[g], pointer(pointer(where, "word"), g)));
    if (!is_normal_word(t.word)) throw SerializationError("word is not in normal order", pointer(where, "word"));
    out.push_back(std::move(t));
  }
  return NcElement::from_terms(std::move(out));
}

Json to_json(const WPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json vars = Json::array();
    for (const auto& v : mono) vars.push_back(Json::array({"b", v.index, v.mode}));
    terms.push_back({{"coeff", c.to_string()}, {"vars", std::move(vars)}});
  }
  return {{"terms", std::move(terms)}};
}

WPolynomial wpolynomial_from_json(const Json& j) {
  const Json& terms = array_at(member(j, "terms", ""), "/terms");
  WPolynomial out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = pointer("/terms", k);
    const Rational c = rational_at(member(terms[k], "coeff", where), pointer(where, "coeff"));
    const Json& vars = array_at(member(terms[k], "vars", where), pointer(where, "vars"));
    WPolynomial term = WPolynomial::constant(c);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const std::string vw = pointer(pointer(where, "vars"), v);
      const Json& var = array_at(vars[v], vw);
      if (var.size() != 3 || var[0] != "b") throw SerializationError("variable must be [\"b\", i, r]", vw);
      try {
        term = term * WPolynomial::variable(int_at(var[1], pointer(vw, 1)), int_at(var[2], pointer(vw, 2)));
      } catch (const std::invalid_argument& e) {
        throw SerializationError(e.what(), vw);
      }
    }
    out += term;
  }
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  array_at(j, "");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : array_at(j[0], "/0").size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = array_at(j[i], pointer("", i));
    if (row.size() != cols) throw SerializationError("ragged matrix row", pointer("", i));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_at(row[c], pointer(pointer("", i), c));
  }
  return m;
}

Json to_json(const NcMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

NcMatrix nc_matrix_from_json(const Json& j) {
  array_at(j, "");
  NcMatrix m(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = array_at(j[i], pointer("", i));
    if (row.size() != j.size()) throw SerializationError("matrix must be square", pointer("", i));
    for (std::size_t c = 0; c < row.size(); ++c) {
      try {
        m(static_cast<int>(i), static_cast<int>(c)) = nc_element_from_json(row[c]);
      } catch (const SerializationError& e) {
        throw SerializationError(e.message(), pointer(pointer("", i), c) + e.location());
      }
    }
  }
  return m;
}

Json to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"label", w.label}, {"residual", w.residual}});
  return {{"check", r.check},       {"n", r.n},          {"passed", r.passed},
          {"checked", r.checked},   {"witnesses", witnesses}, {"wall_ms", r.wall_ms}};
}

CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  const Json& check = member(j, "check", "");
  if (!check.is_string()) throw SerializationError("expected a string", "/check");
  r.check = check.get<std::string>();
  r.n = int_at(member(j, "n", ""), "/n");
  const Json& passed = member(j, "passed", "");
  if (!passed.is_boolean()) throw SerializationError("expected a boolean", "/passed");
  r.passed = passed.get<bool>();
  if (j.contains("checked")) r.checked = static_cast<std::size_t>(int_at(j["checked"], "/checked"));
  if (j.contains("wall_ms")) {
    if (!j["wall_ms"].is_number()) throw SerializationError("expected a number", "/wall_ms");
    r.wall_ms = j["wall_ms"].get<double>();
  }
  const Json& witnesses = array_at(member(j, "witnesses", ""), "/witnesses");
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const std::string where = pointer("/witnesses", k);
    const Json& label = member(witnesses[k], "label", where);
    const Json& residual = member(witnesses[k], "residual", where);
    if (!label.is_string() || !residual.is_string()) throw SerializationError("expected strings", where);
    r.witnesses.push_back({label.get<std::string>(), residual.get<std::string>()});
  }
  return r;
}

Json to_json(const LaurentSeries<Rational>& s) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : s.coefficients()) coeffs[std::to_string(e)] = c.to_string();
  Json out{{"coeffs", std::move(coeffs)}};
  out["precision"] = s.precision() ? Json(*s.precision()) : Json(nullptr);
  return out;
}

Json to_json(const DiffOperator<Rational>& op) {
  Json terms = Json::array();
  for (int k = op.degree(); k >= 0; --k) {
    const auto& c = op.coefficient(k);
    if (c.is_zero() && c.is_exact()) continue;
    terms.push_back({{"d_power", k}, {"coeff", to_json(c)}});
  }
  return {{"terms", std::move(terms)}};
}

Json to_json(const ChiSeries& chi) {
  Json out = Json::array();
  for (const auto& comp : chi.components()) {
    Json coeffs = Json::object();
    for (const auto& [r, c] : comp.coeffs) coeffs[std::to_string(r)] = c.to_string();
    out.push_back({{"coeffs", std::move(coeffs)}, {"min_r", comp.min_r}, {"max_r", comp.max_r}});
  }
  return out;
}

ChiSeries chi_series_from_json(const Json& j) {
  array_at(j, "");
  std::vector<ChiSeries::Component> comps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = pointer("", i);
    ChiSeries::Component comp;
    comp.min_r = int_at(member(j[i], "min_r", where), pointer(where, "min_r"));
    comp.max_r = int_at(member(j[i], "max_r", where), pointer(where, "max_r"));
    const Json& coeffs = member(j[i], "coeffs", where);
    if (!coeffs.is_object()) throw SerializationError("expected an object", pointer(where, "coeffs"));
    for (const auto& [key, value] : coeffs.items()) {
      const std::string cw = pointer(pointer(where, "coeffs"), key);
      int r = 0;
      try {
        std::size_t used = 0;
        r = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw SerializationError("coefficient key must be an integer mode", cw);
      }
      comp.coeffs[r] = rational_at(value, cw);
    }
    comps.push_back(std::move(comp));
  }
  try {
    return ChiSeries(std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw SerializationError(e.what(), "");
  }
}

std::string serialize(const NcElement& x) { return to_json(x).dump(); }
std::string serialize(const WPolynomial& p) { return to_json(p).dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SerializationError("malformed JSON", "byte " + std::to_string(e.byte));
  }
}

NcElement parse_nc_element(std::string_view text) { return nc_element_from_json(parse_json(text)); }
WPolynomial parse_wpolynomial(std::string_view text) { return wpolynomial_from_json(parse_json(text)); }
ChiSeries parse_chi_series(std::string_view text) { return chi_series_from_json(parse_json(text)); }

}  // namespace sugawara
