// Command-line front end: every operation of the toolkit behind one binary
// with JSON-first output. Exit codes: 0 success, 1 mathematical-check
// failure, 2 input/usage error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hstar/ehrhart.hpp"
#include "hstar/errors.hpp"
#include "hstar/eulerian.hpp"
#include "hstar/families.hpp"
#include "hstar/json_io.hpp"
#include "hstar/reflexive.hpp"
#include "hstar/triangulation.hpp"

namespace {

using hstar::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

void emit(const json& j, bool pretty, const std::string& pretty_text) {
  if (pretty)
    std::cout << pretty_text << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

json delta_check_json(const hstar::DeltaCheck& c) {
  return json{{"passed", c.passed}, {"applicable", c.applicable}, {"witness", c.witness}};
}

std::string join_delta(const std::vector<hstar::Int>& delta) {
  std::string s = "(";
  for (size_t i = 0; i < delta.size(); ++i) {
    if (i) s += ", ";
    s += hstar::to_string(delta[i]);
  }
  return s + ")";
}

int run_family(const std::string& kind, int n, bool pretty) {
  hstar::FamilySimplex fam = kind == "qn"        ? hstar::make_qn(n)
                             : kind == "rn"      ? hstar::make_rn(n)
                                                 : hstar::make_rn_tilde(n);
  const json j = hstar::polytope_to_json(fam.polytope);
  std::string text = kind + " with n = " + std::to_string(n) + ", dimension " +
                     std::to_string(fam.polytope.dim()) + "\nvertices:";
  for (const auto& v : fam.polytope.vertices()) {
    text += "\n  (";
    for (size_t i = 0; i < v.size(); ++i)
      text += (i ? ", " : "") + hstar::to_string(v[i]);
    text += ")";
  }
  emit(j, pretty, text);
  return kExitOk;
}

int run_ehrhart(const std::string& path, long max_k, bool reciprocity, bool pretty) {
  const hstar::LatticePolytope p = hstar::polytope_from_json(hstar::load_json_file(path));
  hstar::EhrhartCalculator calc(p);
  const hstar::RatPolynomial poly = calc.ehrhart_polynomial(reciprocity);
  const long upto = max_k >= 0 ? max_k : p.dim();
  json counts = json::array();
  for (long k = 0; k <= upto; ++k) counts.push_back(hstar::int_to_json(calc.count(k)));
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(hstar::rat_to_json(c));
  const json j{{"dim", p.dim()},
               {"counts", counts},
               {"ehrhart", coeffs},
               {"ehrhart_str", poly.str("k")}};
  emit(j, pretty, "i(P,k) = " + poly.str("k"));
  return kExitOk;
}

int run_delta(const std::string& path, bool validate, bool reciprocity, bool pretty) {
  const hstar::LatticePolytope p = hstar::polytope_from_json(hstar::load_json_file(path));
  if (!validate) {
    const std::vector<hstar::Int> delta =
        hstar::EhrhartCalculator(p).delta_vector(reciprocity);
    json arr = json::array();
    for (const auto& c : delta) arr.push_back(hstar::int_to_json(c));
    const std::string str = hstar::IntPolynomial(delta).str("z");
    emit(json{{"dim", p.dim()}, {"delta", arr}, {"delta_str", str}}, pretty,
         "delta(P,z) = " + str);
    return kExitOk;
  }
  const hstar::DeltaReport report = hstar::validate_delta(p);
  json arr = json::array();
  for (const auto& c : report.delta) arr.push_back(hstar::int_to_json(c));
  const json j{{"dim", report.dim},
               {"delta", arr},
               {"delta_str", hstar::IntPolynomial(report.delta).str("z")},
               {"checks",
                json{{"delta0", delta_check_json(report.delta0)},
                     {"delta1_identity", delta_check_json(report.delta1_identity)},
                     {"deltad_interior", delta_check_json(report.deltad_interior)},
                     {"nonnegativity", delta_check_json(report.nonnegativity)},
                     {"hibi_lower_bound", delta_check_json(report.hibi_lower_bound)},
                     {"palindromic", delta_check_json(report.palindromic)}}},
               {"all_passed", report.all_passed()}};
  std::string text = "delta(P,z) = " + hstar::IntPolynomial(report.delta).str("z");
  text += std::string("\nall checks passed: ") + (report.all_passed() ? "yes" : "no");
  emit(j, pretty, text);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_eulerian(int n, const std::string& method, bool pretty) {
  const hstar::IntPolynomial poly = method == "descents"
                                        ? hstar::eulerian_descents(n)
                                        : hstar::eulerian_recurrence(n);
  json arr = json::array();
  for (const auto& c : poly.coeffs()) arr.push_back(hstar::int_to_json(c));
  emit(json{{"n", n}, {"method", method}, {"coefficients", arr},
            {"eulerian_str", poly.str("z")}},
       pretty, "A_" + std::to_string(n) + "(z) = " + poly.str("z"));
  return kExitOk;
}

int run_is_reflexive(const std::string& path, bool pretty) {
  const hstar::LatticePolytope p = hstar::polytope_from_json(hstar::load_json_file(path));
  const hstar::ReflexivityReport r = hstar::is_reflexive(p);
  emit(json{{"reflexive", r.reflexive()},
            {"origin_unique_interior", r.origin_unique_interior},
            {"facet_offsets_one", r.facet_offsets_one},
            {"witness", r.witness}},
       pretty, std::string("reflexive: ") + (r.reflexive() ? "yes" : "no"));
  return kExitOk;
}

int run_dual(const std::string& path, bool pretty) {
  const hstar::LatticePolytope p = hstar::polytope_from_json(hstar::load_json_file(path));
  const hstar::LatticePolytope dual = hstar::dual_polytope(p);
  emit(hstar::polytope_to_json(dual), pretty,
       "dual polytope with " + std::to_string(dual.vertex_count()) + " vertices");
  return kExitOk;
}

int run_equiv(const std::string& path1, const std::string& path2, bool pretty) {
  const hstar::LatticePolytope p1 = hstar::polytope_from_json(hstar::load_json_file(path1));
  const hstar::LatticePolytope p2 = hstar::polytope_from_json(hstar::load_json_file(path2));
  const auto m = hstar::find_equivalence(p1, p2);
  json j{{"equivalent", m.has_value()}};
  if (m) j["map"] = hstar::map_to_json(*m);
  emit(j, pretty, std::string("equivalent: ") + (m ? "yes" : "no"));
  return kExitOk;
}

int run_self_dual(const std::string& path, bool pretty) {
  const hstar::LatticePolytope p = hstar::polytope_from_json(hstar::load_json_file(path));
  const auto m = hstar::is_self_dual(p);
  json j{{"self_dual", m.has_value()}};
  if (m) j["map"] = hstar::map_to_json(*m);
  emit(j, pretty, std::string("self dual: ") + (m ? "yes" : "no"));
  return kExitOk;
}

int run_check_tri(const std::string& poly_path, const std::string& tri_path,
                  bool allow_sub, bool pretty) {
  const hstar::LatticePolytope p =
      hstar::polytope_from_json(hstar::load_json_file(poly_path));
  const hstar::Triangulation t =
      hstar::triangulation_from_json(hstar::load_json_file(tri_path));
  const hstar::CoveringReport covering = hstar::check_covering(t, p);
  const bool unimodular = hstar::check_unimodular(t);
  const bool flag = hstar::check_flag(t);
  const auto policy = allow_sub ? hstar::PointUsePolicy::AllowSubconfiguration
                                : hstar::PointUsePolicy::RequireAllPoints;
  json j{{"covering", covering.covering()},
         {"volume_matches", covering.volume_matches},
         {"interiors_disjoint", covering.interiors_disjoint},
         {"uses_all_points", covering.uses_all_points},
         {"unimodular", unimodular},
         {"flag", flag}};
  bool all = covering.covering() && unimodular && flag;
  if (!allow_sub) all = all && covering.uses_all_points;
  if (t.heights) {
    const hstar::RegularityReport reg =
        hstar::check_regular_with_heights(t, *t.heights, policy);
    j["regular"] = reg.regular;
    j["regular_witness"] = reg.witness;
    all = all && reg.regular;
  }
  if (!covering.witness.empty()) j["witness"] = covering.witness;
  j["all_passed"] = all;
  emit(j, pretty, std::string("certificate: ") + (all ? "PASS" : "FAIL"));
  return all ? kExitOk : kExitCheckFailed;
}

int run_search_rfu(const std::string& poly_path, std::uint64_t trials,
                   std::uint64_t seed, bool pretty) {
  const hstar::LatticePolytope p =
      hstar::polytope_from_json(hstar::load_json_file(poly_path));
  const auto result = hstar::search_rfu(p, trials, seed);
  if (!result) {
    emit(json{{"found", false}, {"trials", trials}, {"seed", seed},
              {"outcome", "absent"}},
         pretty, "absent (no certificate found; absence is not a disproof)");
    return kExitOk;
  }
  json j{{"found", true},
         {"trial", result->trial},
         {"seed", result->seed},
         {"triangulation", hstar::triangulation_to_json(result->triangulation)}};
  emit(j, pretty,
       "found a regular, flag, unimodular triangulation at trial " +
           std::to_string(result->trial) + " with " +
           std::to_string(result->triangulation.cells.size()) + " cells");
  return kExitOk;
}

struct TheoremOutcome {
  bool pass = false;
  json witness;
};

TheoremOutcome verify_volume(int n) {
  const hstar::Int vol = hstar::make_qn(n).polytope.normalized_volume();
  const hstar::Int expected = hstar::factorial(n);
  return {vol == expected,
          json{{"volume", hstar::int_to_json(vol)},
               {"expected", hstar::int_to_json(expected)}}};
}

TheoremOutcome verify_selfdual(int n) {
  const hstar::LatticePolytope qn = hstar::make_qn(n).polytope;
  const auto m = hstar::is_self_dual(qn);
  if (!m) return {false, json{{"map", nullptr}}};
  const bool ok = qn.apply(*m) == hstar::dual_polytope(qn);
  return {ok, json{{"map", hstar::map_to_json(*m)}}};
}

TheoremOutcome verify_delta_eulerian(int n, bool reciprocity) {
  const hstar::LatticePolytope qn = hstar::make_qn(n).polytope;
  const std::vector<hstar::Int> delta =
      hstar::EhrhartCalculator(qn).delta_vector(reciprocity);
  const hstar::IntPolynomial a_n = hstar::eulerian_recurrence(n);
  bool ok = hstar::IntPolynomial(delta) == a_n;
  json witness{{"delta", hstar::IntPolynomial(delta).str("z")},
               {"eulerian", a_n.str("z")}};
  if (n <= hstar::kEulerianDescentsMaxN) {
    const bool descents_agree = hstar::eulerian_descents(n) == a_n;
    witness["descents_agree"] = descents_agree;
    ok = ok && descents_agree;
  }
  return {ok, witness};
}

TheoremOutcome verify_rntilde(int n) {
  const hstar::LatticePolytope image =
      hstar::make_qn(n).polytope.apply(hstar::qn_to_rntilde(n));
  const hstar::LatticePolytope expected = hstar::make_rn_tilde(n).polytope;
  return {image == expected,
          json{{"map", hstar::map_to_json(hstar::qn_to_rntilde(n))}}};
}

TheoremOutcome verify_pyramid(int n) {
  const hstar::LatticePolytope qn = hstar::make_qn(n).polytope;
  const std::vector<hstar::Int> base = hstar::delta_vector(qn);
  const std::vector<hstar::Int> pyr = hstar::delta_vector(qn.pyramid());
  return {hstar::IntPolynomial(base) == hstar::IntPolynomial(pyr),
          json{{"delta", hstar::IntPolynomial(base).str("z")},
               {"delta_pyramid", hstar::IntPolynomial(pyr).str("z")}}};
}

int run_verify(const std::string& theorem, int n, bool reciprocity, bool pretty) {
  TheoremOutcome outcome;
  if (theorem == "volume")
    outcome = verify_volume(n);
  else if (theorem == "selfdual")
    outcome = verify_selfdual(n);
  else if (theorem == "delta-eulerian")
    outcome = verify_delta_eulerian(n, reciprocity);
  else if (theorem == "rntilde")
    outcome = verify_rntilde(n);
  else
    outcome = verify_pyramid(n);
  json j{{"theorem", theorem},
         {"n", n},
         {"pass", outcome.pass},
         {"witness", outcome.witness}};
  emit(j, pretty,
       theorem + " at n = " + std::to_string(n) + ": " +
           (outcome.pass ? "PASS" : "FAIL"));
  return outcome.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hstar: exact Ehrhart / reflexive-polytope toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
  app.fallthrough();

  std::string family_kind;
  int family_n = 0;
  auto* family = app.add_subcommand("family", "construct Q_n, R_n or R~_n");
  family->add_option("kind", family_kind, "qn, rn or rntilde")
      ->required()
      ->check(CLI::IsMember({"qn", "rn", "rntilde"}));
  family->add_option("--n", family_n, "family index (n >= 2)")->required();

  std::string ehrhart_in;
  long ehrhart_max_k = -1;
  bool ehrhart_recip = false;
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and counts");
  ehrhart->add_option("--in", ehrhart_in, "polytope JSON file")->required();
  ehrhart->add_option("--max-k", ehrhart_max_k, "report counts up to this dilation");
  ehrhart->add_flag("--reciprocity", ehrhart_recip,
                    "use the reciprocity fast path (reflexive input only)");

  std::string delta_in;
  bool delta_validate = false, delta_recip = false;
  auto* delta = app.add_subcommand("delta", "delta-polynomial");
  delta->add_option("--in", delta_in, "polytope JSON file")->required();
  delta->add_flag("--validate", delta_validate, "run all coefficient checks");
  delta->add_flag("--reciprocity", delta_recip,
                  "use the reciprocity fast path (reflexive input only)");

  int eulerian_n = 0;
  std::string eulerian_method = "recurrence";
  auto* eulerian = app.add_subcommand("eulerian", "Eulerian polynomial A_n(z)");
  eulerian->add_option("--n", eulerian_n, "number of letters")->required();
  eulerian->add_option("--method", eulerian_method, "recurrence or descents")
      ->check(CLI::IsMember({"recurrence", "descents"}));

  std::string reflexive_in;
  auto* reflexive = app.add_subcommand("is-reflexive", "reflexivity test");
  reflexive->add_option("--in", reflexive_in, "polytope JSON file")->required();

  std::string dual_in;
  auto* dual = app.add_subcommand("dual", "dual polytope of a reflexive polytope");
  dual->add_option("--in", dual_in, "polytope JSON file")->required();

  std::string equiv_in1, equiv_in2;
  auto* equiv = app.add_subcommand("equiv", "unimodular equivalence of simplices");
  equiv->add_option("--in1", equiv_in1, "first polytope JSON file")->required();
  equiv->add_option("--in2", equiv_in2, "second polytope JSON file")->required();

  std::string selfdual_in;
  auto* selfdual = app.add_subcommand("self-dual", "self-duality of a reflexive simplex");
  selfdual->add_option("--in", selfdual_in, "polytope JSON file")->required();

  std::string verify_theorem;
  int verify_n = 0;
  bool verify_recip = false;
  auto* verify = app.add_subcommand("verify", "one-command theorem checks");
  verify->add_option("--theorem", verify_theorem,
                     "selfdual, delta-eulerian, rntilde, pyramid or volume")
      ->required()
      ->check(CLI::IsMember(
          {"selfdual", "delta-eulerian", "rntilde", "pyramid", "volume"}));
  verify->add_option("--n", verify_n, "family index (n >= 2)")->required();
  verify->add_flag("--reciprocity", verify_recip,
                   "allow the reciprocity fast path where applicable");

  std::string tri_poly, tri_file;
  bool tri_allow_sub = false;
  auto* checktri = app.add_subcommand("check-tri", "triangulation certificates");
  checktri->add_option("--poly", tri_poly, "polytope JSON file")->required();
  checktri->add_option("--tri", tri_file, "triangulation JSON file")->required();
  checktri->add_flag("--allow-sub-configuration", tri_allow_sub,
                     "accept triangulations that use only some points");

  std::string rfu_poly;
  std::uint64_t rfu_trials = 1000, rfu_seed = 0;
  auto* rfu = app.add_subcommand("search-rfu",
                                 "search for a regular flag unimodular triangulation");
  rfu->add_option("--poly", rfu_poly, "polytope JSON file")->required();
  rfu->add_option("--trials", rfu_trials, "number of random height trials");
  rfu->add_option("--seed", rfu_seed, "seed for the height generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (family->parsed()) return run_family(family_kind, family_n, pretty);
    if (ehrhart->parsed())
      return run_ehrhart(ehrhart_in, ehrhart_max_k, ehrhart_recip, pretty);
    if (delta->parsed()) return run_delta(delta_in, delta_validate, delta_recip, pretty);
    if (eulerian->parsed()) return run_eulerian(eulerian_n, eulerian_method, pretty);
    if (reflexive->parsed()) return run_is_reflexive(reflexive_in, pretty);
    if (dual->parsed()) return run_dual(dual_in, pretty);
    if (equiv->parsed()) return run_equiv(equiv_in1, equiv_in2, pretty);
    if (selfdual->parsed()) return run_self_dual(selfdual_in, pretty);
    if (verify->parsed()) return run_verify(verify_theorem, verify_n, verify_recip, pretty);
    if (checktri->parsed())
      return run_check_tri(tri_poly, tri_file, tri_allow_sub, pretty);
    if (rfu->parsed()) return run_search_rfu(rfu_poly, rfu_trials, rfu_seed, pretty);
  } catch (const hstar::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const hstar::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const hstar::Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
