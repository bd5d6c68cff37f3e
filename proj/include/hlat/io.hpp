#pragma once

// JSON serialization of polynomials, forms, Gram matrices and reports.
// Everything is written compactly on one line; readers reject anything that
// is not exactly integral or has the wrong shape.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlat/charvec.hpp"
#include "hlat/forms.hpp"
#include "hlat/gram.hpp"
#include "hlat/lattice.hpp"
#include "hlat/ring.hpp"
#include "hlat/roots.hpp"

namespace hlat::io {

using Json = nlohmann::json;

inline Int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw InputError(std::string(what) + ": integer out of 64-bit range");
  return j.get<Int>();
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key '") + key + "'");
  return *it;
}

inline const Json& array_of(const Json& j, const char* what, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    throw InputError(std::string(what) + ": expected an array of length " + std::to_string(expected));
  return j;
}

inline std::size_t get_size(const Json& j, const char* what) {
  const Int v = get_int(j, what);
  if (v < 0) throw InputError(std::string(what) + ": must be non-negative");
  return static_cast<std::size_t>(v);
}

// --- LaurentPoly: {"0":3,"1":1,"-1":1}; a string in the text syntax is also accepted.

inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_string()) return parse_laurent(j.get<std::string>());
  if (j.is_number_integer()) return LaurentPoly(get_int(j, "constant polynomial"));
  if (!j.is_object()) throw InputError("Laurent polynomial: expected an object of exponent -> coefficient");
  LaurentPoly p;
  for (const auto& [key, val] : j.items()) {
    Int e = 0;
    std::size_t used = 0;
    try {
      e = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw InputError("Laurent polynomial: bad exponent key '" + key + "'");
    if (p.coeff(e) != 0) throw InputError("Laurent polynomial: duplicate exponent " + key);
    p += LaurentPoly::monomial(get_int(val, "coefficient"), e);
  }
  return p;
}

// --- CyclicElement: {"n":3,"coeffs":[2,2,2]}

inline Json to_json(const CyclicElement& c) { return Json{{"n", c.modulus()}, {"coeffs", c.coeffs()}}; }

inline std::vector<Int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  std::vector<Int> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(get_int(e, what));
  return v;
}

inline CyclicElement cyclic_from_json(const Json& j) {
  const Int n = get_int(field(j, "n"), "n");
  if (n < 1) throw InputError("cyclic element: modulus must be >= 1");
  return CyclicElement(n, int_array(field(j, "coeffs"), "coeffs"));
}

// --- HermitianForm: {"size":4,"entries":[[poly,...],...]}

inline Json to_json(const HermitianForm& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) row.push_back(to_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"size", g.size()}, {"entries", std::move(rows)}};
}

inline HermitianForm hermitian_from_json(const Json& j) {
  const std::size_t m = get_size(field(j, "size"), "size");
  const Json& rows = array_of(field(j, "entries"), "entries", m);
  Matrix<LaurentPoly> e(m, m, LaurentPoly());
  for (std::size_t i = 0; i < m; ++i) {
    const Json& row = array_of(rows[i], "entries row", m);
    for (std::size_t k = 0; k < m; ++k) e(i, k) = laurent_from_json(row[k]);
  }
  return HermitianForm(std::move(e));
}

// --- CyclicForm: {"n":3,"size":4,"entries":[[[c_0..c_{n-1}],...],...]}
// Entries may also be written as CyclicElement objects or Laurent polynomials,
// which are reduced mod x^n - 1.

inline Json to_json(const CyclicForm& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.size(); ++k) row.push_back(g(i, k).coeffs());
    rows.push_back(std::move(row));
  }
  return Json{{"n", g.modulus()}, {"size", g.size()}, {"entries", std::move(rows)}};
}

inline CyclicForm cyclic_form_from_json(const Json& j) {
  const Int n = get_int(field(j, "n"), "n");
  if (n < 1) throw InputError("cyclic form: modulus must be >= 1");
  const std::size_t m = get_size(field(j, "size"), "size");
  const Json& rows = array_of(field(j, "entries"), "entries", m);
  Matrix<CyclicElement> e(m, m, CyclicElement(n));
  for (std::size_t i = 0; i < m; ++i) {
    const Json& row = array_of(rows[i], "entries row", m);
    for (std::size_t k = 0; k < m; ++k) {
      const Json& x = row[k];
      CyclicElement c = x.is_array()                     ? CyclicElement(n, int_array(x, "coeffs"))
                        : x.is_object() && x.contains("coeffs") ? cyclic_from_json(x)
                                                                : reduce_mod(laurent_from_json(x), n);
      if (c.modulus() != n) throw InputError("cyclic form: entry modulus differs from n");
      e(i, k) = std::move(c);
    }
  }
  return CyclicForm(n, std::move(e));
}

// --- GramMatrix: {"rank":r,"gram":[[...],...]}

inline Json to_json(const GramMatrix& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.rank(); ++k) row.push_back(g(i, k));
    rows.push_back(std::move(row));
  }
  return Json{{"rank", g.rank()}, {"gram", std::move(rows)}};
}

inline GramMatrix gram_from_json(const Json& j) {
  const std::size_t r = get_size(field(j, "rank"), "rank");
  const Json& rows = array_of(field(j, "gram"), "gram", r);
  IntMatrix m(r, r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = array_of(rows[i], "gram row", r);
    for (std::size_t k = 0; k < r; ++k) m(i, k) = get_int(row[k], "gram entry");
  }
  return GramMatrix(std::move(m));
}

// --- Reports

inline Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

inline Json to_json(const EnumerationResult& r) { return Json{{"bound", r.bound}, {"pairs", vectors_json(r.vectors)}}; }

inline EnumerationResult enumeration_from_json(const Json& j) {
  EnumerationResult r;
  r.bound = get_int(field(j, "bound"), "bound");
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw InputError("pairs: expected an array");
  for (const auto& p : pairs) r.vectors.push_back(int_array(p, "pair"));
  return r;
}

inline Json to_json(const CharReport& r) {
  return Json{{"rank", r.rank},         {"min_norm", r.min_norm},
              {"defect", r.defect},     {"mu", r.mu},
              {"is_standard", r.is_standard}, {"minimizers", vectors_json(r.minimizers)}};
}

inline Json to_json(const RootSystemReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"type", std::string(1, static_cast<char>(c.type))}, {"rank", c.rank}, {"roots", c.roots}});
  return Json{{"components", std::move(comps)},
              {"label", r.label()},
              {"total_roots", r.total_roots},
              {"spanning_rank", r.spanning_rank}};
}

inline RootSystemReport root_system_from_json(const Json& j) {
  RootSystemReport r;
  const Json& comps = field(j, "components");
  if (!comps.is_array()) throw InputError("components: expected an array");
  for (const auto& c : comps) {
    const Json& t = field(c, "type");
    if (!t.is_string() || t.get<std::string>().size() != 1) throw InputError("component type must be one letter");
    r.components.push_back(
        {parse_root_type(t.get<std::string>()[0]), get_int(field(c, "rank"), "rank"), get_int(field(c, "roots"), "roots")});
    r.total_roots += r.components.back().roots;
  }
  if (j.contains("spanning_rank")) r.spanning_rank = get_int(j["spanning_rank"], "spanning_rank");
  return r;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const StandardnessResult& s) {
  Json j{{"standard", s.standard}, {"unit_pairs", s.unit_pairs}};
  if (s.orthonormal_basis) j["orthonormal_basis"] = to_json(*s.orthonormal_basis);
  if (s.witness) {
    j["witness"] = *s.witness;
    j["witness_norm"] = s.witness_norm;
  }
  return j;
}

// --- Files

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline Json read_json(const std::string& path) { return parse(read_text(path), path); }

inline void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << j.dump() << '\n';
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace hlat::io
