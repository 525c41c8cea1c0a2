// Command-line front end: state generation, invariant reports, LU-equivalence
// and entanglement checks, permutation traces and the selftest suite.
//
// Exit codes: 0/1 command verdicts, 2 usage or parse error, 3 inconclusive or
// boundary, 4 internal property failure.

#include "luinv/entanglement.hpp"
#include "luinv/luequiv.hpp"
#include "luinv/selftest.hpp"
#include "luinv/state_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace luinv;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBoundary = 3;
constexpr int kExitInternal = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StateDocument load_state(const std::string& path) {
  return parse_state_document(read_input(path));
}

void warn_if_not_psd(const StateDocument& doc) {
  const double mineig = min_eigenvalue(doc.rho);
  if (mineig < -1e-9)
    std::cerr << "warning: input is not positive semidefinite (min eigenvalue " << mineig
              << "); computing anyway\n";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json bargmann_json(const BargmannVector& b) {
  Json arr = Json::array();
  for (int k = 0; k < 18; ++k) {
    if (k < 12)
      arr.push_back(b[static_cast<std::size_t>(k)].real());
    else
      arr.push_back(complex_to_json(b[static_cast<std::size_t>(k)]));
  }
  return arr;
}

Json makhlin_json(const MakhlinVector& l) {
  Json arr = Json::array();
  for (double v : l) arr.push_back(v);
  return arr;
}

Json verdict_json(const EntanglementVerdict& v) {
  return Json{{"method", to_string(v.method)},
              {"entangled", v.entangled},
              {"boundary", v.boundary},
              {"margin", v.margin}};
}

Permutation parse_one_line(const std::string& text) {
  Permutation pi;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("permutation: empty entry in \"" + text + "\"");
    pi.push_back(std::stoi(item) - 1);  // CLI uses 1-based one-line notation
  }
  if (pi.empty() || !is_permutation(pi))
    throw std::invalid_argument("permutation: \"" + text + "\" is not one-line notation of 1..n");
  return pi;
}

int cmd_invariants(const std::string& input, const std::string& family) {
  const StateDocument doc = load_state(input);
  warn_if_not_psd(doc);
  Json report = Json::object();
  if (!doc.label.empty()) report["label"] = doc.label;
  report["family"] = family;
  const StateParams p = params_from_state(doc.rho);
  if (family == "B" || family == "all") report["B"] = bargmann_json(bargmann_direct(doc.rho));
  if (family == "L" || family == "all") report["L"] = makhlin_json(makhlin_L(p));
  if (family == "I" || family == "all") report["I"] = makhlin_json(makhlin_I(p));
  emit(report);
  return kExitOk;
}

int cmd_check_lu(const std::string& input1, const std::string& input2, double tol) {
  StateDocument a, b;
  if (input2.empty()) {
    // Single file holding an array of two documents (as written by gen lu-orbit).
    const Json j = Json::parse(read_input(input1));
    if (!j.is_array() || j.size() != 2)
      throw std::invalid_argument("check-lu: single input must be an array of two documents");
    a = parse_state_document(j.at(0));
    b = parse_state_document(j.at(1));
  } else {
    a = load_state(input1);
    b = load_state(input2);
  }
  const EquivalenceReport rep = lu_equivalent(a.rho, b.rho, tol);
  emit(Json{{"verdict", to_string(rep.verdict)},
            {"max_discrepancy", rep.max_discrepancy},
            {"worst_index", rep.worst_index},
            {"tol", tol}});
  switch (rep.verdict) {
    case Equivalence::equivalent: return kExitOk;
    case Equivalence::inequivalent: return kExitVerdict;
    case Equivalence::inconclusive: return kExitBoundary;
  }
  return kExitInternal;
}

int cmd_check_ent(const std::string& input, const std::string& method) {
  const StateDocument doc = load_state(input);
  Json report = Json::object();
  if (!doc.label.empty()) report["label"] = doc.label;
  std::vector<EntanglementVerdict> verdicts;
  if (method == "ppt" || method == "all") verdicts.push_back(is_entangled_ppt(doc.rho));
  if (method == "makhlin" || method == "all")
    verdicts.push_back(is_entangled_makhlin(params_from_state(doc.rho)));
  if (method == "bargmann" || method == "all")
    verdicts.push_back(is_entangled_bargmann(bargmann_direct(doc.rho)));
  Json arr = Json::array();
  for (const auto& v : verdicts) arr.push_back(verdict_json(v));
  report["verdicts"] = std::move(arr);
  emit(report);

  bool any_boundary = false;
  for (const auto& v : verdicts) any_boundary = any_boundary || v.boundary;
  for (std::size_t i = 1; i < verdicts.size(); ++i) {
    if (!any_boundary && verdicts[i].entangled != verdicts[0].entangled) {
      std::cerr << "error: detectors disagree outside the boundary band\n";
      return kExitInternal;
    }
  }
  if (any_boundary) return kExitBoundary;
  return verdicts.front().entangled ? kExitVerdict : kExitOk;
}

int cmd_gen(const std::string& kind, double w, double t1, double t2, double t3,
            std::uint64_t seed, const std::string& input, const std::string& label) {
  if (kind == "werner") {
    StateParams p;
    p.C = -w * Mat3::Identity();
    if (w < 0.0 || w > 1.0) throw std::out_of_range("gen werner: w must lie in [0,1]");
    emit(to_bloch_document(p, label.empty() ? "werner(w=" + std::to_string(w) + ")" : label));
    return kExitOk;
  }
  if (kind == "bell-diagonal") {
    if (!in_bell_diagonal_region(t1, t2, t3, 1e-12))
      throw std::out_of_range("gen bell-diagonal: (t1,t2,t3) outside the state tetrahedron");
    StateParams p;
    p.C = Vec3(t1, t2, t3).asDiagonal();
    emit(to_bloch_document(p, label.empty() ? "bell-diagonal" : label));
    return kExitOk;
  }
  std::mt19937_64 rng(seed);
  if (kind == "random") {
    emit(to_matrix_document(random_density(rng),
                            label.empty() ? "random(seed=" + std::to_string(seed) + ")" : label));
    return kExitOk;
  }
  if (kind == "lu-orbit") {
    if (input.empty()) throw std::invalid_argument("gen lu-orbit: --input is required");
    const StateDocument doc = load_state(input);
    const Mat4c rotated = apply_lu(doc.rho, random_local_unitary(rng));
    Json pair = Json::array();
    pair.push_back(to_matrix_document(doc.rho, doc.label.empty() ? "original" : doc.label));
    pair.push_back(to_matrix_document(rotated, "lu-orbit(seed=" + std::to_string(seed) + ")"));
    emit(pair);
    return kExitOk;
  }
  throw std::invalid_argument("gen: unknown kind \"" + kind + "\"");
}

int cmd_perm_trace(const std::string& input, const std::string& pi_a, const std::string& pi_b,
                   int n) {
  const StateDocument doc = load_state(input);
  PermutationTuple t;
  t.dims = {2, 2};
  t.pis = {parse_one_line(pi_a), parse_one_line(pi_b)};
  t.n = (n > 0) ? n : static_cast<int>(t.pis[0].size());
  if (t.pis[0].size() != t.pis[1].size() || static_cast<int>(t.pis[0].size()) != t.n)
    throw std::invalid_argument("perm-trace: permutations must both have length n");
  const cplx value = permutation_trace(doc.rho, t);
  emit(Json{{"n", t.n}, {"pi_a", pi_a}, {"pi_b", pi_b}, {"value", complex_to_json(value)}});
  return kExitOk;
}

int cmd_selftest(const std::string& profile, std::uint64_t seed, double tol) {
  // --tol rescales every property tolerance relative to the 1e-8 default;
  // --tol 0 is the harness canary and must fail.
  const double tol_scale = tol / 1e-8;
  const auto results = selftest::run_selftest(profile, seed, tol_scale);
  const auto summary = selftest::summarize(results);
  Json props = Json::array();
  for (const auto& r : results) {
    Json p{{"name", r.name}, {"passed", r.passed}, {"worst", r.worst}, {"tol", r.tolerance}};
    if (!r.note.empty()) p["note"] = r.note;
    props.push_back(std::move(p));
    std::cerr << (r.passed ? "[pass] " : "[FAIL] ") << r.name << " (worst " << r.worst << ", tol "
              << r.tolerance << ")\n";
  }
  emit(Json{{"profile", profile},
            {"seed", seed},
            {"total", summary.total},
            {"failed", summary.failed},
            {"properties", std::move(props)}});
  return summary.failed == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-unitary invariants and entanglement tests for two-qubit states"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::string format = "json";
  app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--format", format, "output format (json only)")
      ->check(CLI::IsMember({"json"}));

  auto* inv = app.add_subcommand("invariants", "print invariant families of a state");
  std::string inv_input, inv_family = "all";
  inv->add_option("input", inv_input, "state document (path or - for stdin)")->required();
  inv->add_option("--family", inv_family, "B, L, I or all")
      ->check(CLI::IsMember({"B", "L", "I", "all"}));

  auto* clu = app.add_subcommand("check-lu", "decide LU equivalence of two states");
  std::string clu_a, clu_b;
  clu->add_option("input1", clu_a, "first state document (or a pair array)")->required();
  clu->add_option("input2", clu_b, "second state document");

  auto* cent = app.add_subcommand("check-ent", "entanglement verdict for a state");
  std::string cent_input, cent_method = "all";
  cent->add_option("input", cent_input, "state document (path or - for stdin)")->required();
  cent->add_option("--method", cent_method, "ppt, makhlin, bargmann or all")
      ->check(CLI::IsMember({"ppt", "makhlin", "bargmann", "all"}));

  auto* gen = app.add_subcommand("gen", "generate state documents");
  std::string gen_kind, gen_input, gen_label;
  double gen_w = 0.0, gen_t1 = 0.0, gen_t2 = 0.0, gen_t3 = 0.0;
  gen->add_option("kind", gen_kind, "werner | bell-diagonal | random | lu-orbit")->required();
  gen->add_option("--w", gen_w, "Werner mixing parameter");
  gen->add_option("--t1", gen_t1, "Bell-diagonal t1");
  gen->add_option("--t2", gen_t2, "Bell-diagonal t2");
  gen->add_option("--t3", gen_t3, "Bell-diagonal t3");
  gen->add_option("--input", gen_input, "base state for lu-orbit");
  gen->add_option("--label", gen_label, "document label");

  auto* pt = app.add_subcommand("perm-trace", "tr[rho^(x)n P(pi_a, pi_b)]");
  std::string pt_input, pt_pia, pt_pib;
  int pt_n = 0;
  pt->add_option("input", pt_input, "state document (path or - for stdin)")->required();
  pt->add_option("--pi-a", pt_pia, "one-line permutation for subsystem A, e.g. 2,1")->required();
  pt->add_option("--pi-b", pt_pib, "one-line permutation for subsystem B")->required();
  pt->add_option("--n", pt_n, "copy count (default: permutation length)");

  auto* st = app.add_subcommand("selftest", "run the property suites");
  std::string st_profile = "quick";
  st->add_option("--profile", st_profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_input, inv_family);
    if (clu->parsed()) return cmd_check_lu(clu_a, clu_b, tol);
    if (cent->parsed()) return cmd_check_ent(cent_input, cent_method);
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_w, gen_t1, gen_t2, gen_t3, seed, gen_input, gen_label);
    if (pt->parsed()) return cmd_perm_trace(pt_input, pt_pia, pt_pib, pt_n);
    if (st->parsed()) return cmd_selftest(st_profile, seed, tol);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
