#include "luinv/state_io.hpp"

#include <nlohmann/json.hpp>

namespace luinv {

Json complex_to_json(const cplx& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

namespace {

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("state document: complex entries need {\"re\", \"im\"}");
  return cplx(j.at("re").get<double>(), j.at("im").get<double>());
}

Mat4c matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("state document: \"matrix\" must be 4 rows");
  Mat4c m;
  for (int r = 0; r < 4; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || row.size() != 4)
      throw std::invalid_argument("state document: each matrix row must have 4 entries");
    for (int c = 0; c < 4; ++c) m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

Vec3 vec3_from_json(const Json& j, const char* name) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(std::string("state document: \"") + name + "\" must have 3 entries");
  return Vec3(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>());
}

}  // namespace

StateDocument parse_state_document(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("state document: expected a JSON object");
  const bool has_matrix = j.contains("matrix");
  const bool has_bloch = j.contains("bloch");
  if (has_matrix == has_bloch)
    throw std::invalid_argument(
        "state document: exactly one of \"matrix\" or \"bloch\" must be present");

  StateDocument doc;
  if (j.contains("label")) doc.label = j.at("label").get<std::string>();

  if (has_matrix) {
    doc.rho = matrix_from_json(j.at("matrix"));
  } else {
    const Json& b = j.at("bloch");
    StateParams p;
    p.a = vec3_from_json(b.at("a"), "a");
    p.b = vec3_from_json(b.at("b"), "b");
    const Json& cj = b.at("C");
    if (!cj.is_array() || cj.size() != 3)
      throw std::invalid_argument("state document: \"C\" must be 3 rows of 3 reals");
    for (int r = 0; r < 3; ++r) {
      const Json& row = cj.at(static_cast<std::size_t>(r));
      if (!row.is_array() || row.size() != 3)
        throw std::invalid_argument("state document: \"C\" must be 3 rows of 3 reals");
      for (int c = 0; c < 3; ++c) p.C(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
    }
    doc.rho = state_from_params(p);
  }

  if ((doc.rho - doc.rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("state document: matrix is not Hermitian");
  if (std::abs(doc.rho.trace() - cplx(1.0)) > 1e-8)
    throw std::invalid_argument("state document: trace is not 1");
  return doc;
}

StateDocument parse_state_document(const std::string& text) {
  return parse_state_document(Json::parse(text));
}

Json to_matrix_document(const Mat4c& rho, const std::string& label) {
  Json j = Json::object();
  if (!label.empty()) j["label"] = label;
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(rho(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Json to_bloch_document(const StateParams& p, const std::string& label) {
  Json j = Json::object();
  if (!label.empty()) j["label"] = label;
  Json b = Json::object();
  b["a"] = Json::array({p.a(0), p.a(1), p.a(2)});
  b["b"] = Json::array({p.b(0), p.b(1), p.b(2)});
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(Json::array({p.C(r, 0), p.C(r, 1), p.C(r, 2)}));
  b["C"] = std::move(rows);
  j["bloch"] = std::move(b);
  return j;
}

}  // namespace luinv
