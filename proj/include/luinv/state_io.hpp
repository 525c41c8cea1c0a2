// JSON state documents shared by the CLI and the tests. A document carries
// exactly one representation: a dense 4x4 complex matrix (entries as
// {"re", "im"} pairs) or a Bloch block {"a", "b", "C"}.
#pragma once

#include "luinv/states.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace luinv {

using Json = nlohmann::ordered_json;

struct StateDocument {
  std::string label;
  Mat4c rho;
};

// Throws std::invalid_argument on schema violations, non-Hermitian input or
// trace far from one. PSD is not checked here.
StateDocument parse_state_document(const Json& j);
StateDocument parse_state_document(const std::string& text);

Json to_matrix_document(const Mat4c& rho, const std::string& label = "");
Json to_bloch_document(const StateParams& p, const std::string& label = "");

Json complex_to_json(const cplx& z);

}  // namespace luinv
