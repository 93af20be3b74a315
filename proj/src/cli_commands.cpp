#include "isgx/cli_commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "isgx/equivalence.hpp"
#include "isgx/error.hpp"
#include "isgx/scenario.hpp"

namespace isgx {

namespace {

using nlohmann::json;

bool log_enabled() {
  const char* v = std::getenv("ISGX_LOG");
  return v && *v && std::string(v) != "0" && std::string(v) != "off";
}

void log_line(std::ostream& es, const std::string& msg) {
  if (log_enabled()) es << "[isgx] " << msg << "\n";
}

struct LoadedScenario {
  Scenario scenario;
  std::vector<MatrixRep> family;
  double tol;
  std::uint64_t seed;
};

LoadedScenario load(const CliOptions& opt, std::ostream& es) {
  log_line(es, "loading " + opt.path);
  try {
    LoadedScenario ls{Scenario::from_file(opt.path), {}, 0.0, 0};
    ls.tol = opt.tol.value_or(ls.scenario.tolerance);
    ls.seed = opt.seed.value_or(ls.scenario.seed);
    ls.family = ls.scenario.select_representations(opt.family);
    if (ls.family.empty()) throw ParseError("scenario declares no representations");
    return ls;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Anything thrown while materializing domain objects is an input error.
    throw ParseError(std::string("load: ") + e.what());
  }
}

void emit(const CliOptions& opt, std::ostream& os, const json& report,
          const std::string& text_summary) {
  if (opt.text)
    os << text_summary;
  else
    os << report.dump(2) << "\n";
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw ParseError("cannot write report to " + opt.out);
    f << report.dump(2) << "\n";
  }
}

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

json semigroup_summary(const FiniteInverseSemigroup& sg) {
  json idems = json::array();
  for (int f : idempotents(sg)) idems.push_back(sg.name(f));
  return {{"size", sg.size()},
          {"unit", sg.name(sg.unit())},
          {"idempotents", idems},
          {"is_semilattice", is_semilattice(sg)},
          {"table", sg.to_json()}};
}

struct ValidationOutcome {
  json report;
  bool passed;
};

ValidationOutcome run_validation(const LoadedScenario& ls) {
  const PartialAction& pa = *ls.scenario.action;
  const ValidationReport axioms = validate_axioms(pa);

  json reps = json::array();
  bool reps_ok = true;
  for (const auto& rep : ls.family) {
    const ValidationReport cov = validate_covariant(pa, rep, ls.tol);
    reps_ok = reps_ok && cov.passed();
    reps.push_back({{"name", rep.name}, {"dim", rep.dim}, {"covariant", cov.to_json()}});
  }

  const bool passed = axioms.passed() && reps_ok;
  json report = {{"semigroup", semigroup_summary(pa.semigroup())},
                 {"axioms", axioms.to_json()},
                 {"alpha_e_identity", pa.map(pa.semigroup().unit()).is_identity()},
                 {"representations", reps},
                 {"passed", passed}};
  return {report, passed};
}

}  // namespace

int cmd_validate(const CliOptions& opt, std::ostream& os, std::ostream& es) {
  try {
    const LoadedScenario ls = load(opt, es);
    ValidationOutcome v = run_validation(ls);
    v.report["command"] = "validate";
    v.report["scenario"] = opt.path;
    v.report["tolerance"] = ls.tol;
    v.report["seed"] = ls.seed;

    std::string text = "validate " + opt.path + ": " + verdict(v.passed) + "\n";
    text += "  semigroup: " + std::to_string(ls.scenario.semigroup().size()) + " elements, " +
            std::to_string(idempotents(ls.scenario.semigroup()).size()) + " idempotents\n";
    text += "  axioms: " + verdict(v.report["axioms"]["passed"].get<bool>()) + "\n";
    for (const auto& r : v.report["representations"])
      text += "  covariant[" + r["name"].get<std::string>() +
              "]: " + verdict(r["covariant"]["passed"].get<bool>()) + "\n";
    emit(opt, os, v.report, text);
    return v.passed ? 0 : 1;
  } catch (const Error& e) {
    es << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_crossed(const CliOptions& opt, std::ostream& os, std::ostream& es) {
  try {
    const LoadedScenario ls = load(opt, es);
    const PartialAction& pa = *ls.scenario.action;
    const auto& sg = pa.semigroup();

    ValidationOutcome v = run_validation(ls);
    if (!v.passed) {
      json report = {{"command", "crossed"},
                     {"scenario", opt.path},
                     {"validation", v.report},
                     {"passed", false}};
      emit(opt, os, report, "crossed " + opt.path + ": FAIL (scenario does not validate)\n");
      return 1;
    }

    log_line(es, "building L and the relative crossed product");
    auto lalg_ptr = std::make_shared<LAlgebra>(ls.scenario.action);
    const LAlgebra& lalg = *lalg_ptr;
    RepFamily family{ls.family};

    json checks;
    bool ok = true;

    const ValidationReport laws = verify_banach_star_laws(lalg, ls.seed, 200, ls.tol);
    checks["banach_star_laws"] = laws.to_json();
    ok = ok && laws.passed();

    json integrated = json::array();
    for (const auto& rep : family.reps) {
      const ValidationReport vi = verify_integrated(rep, lalg, ls.tol);
      integrated.push_back({{"name", rep.name}, {"report", vi.to_json()}});
      ok = ok && vi.passed();
    }
    checks["integrated"] = integrated;

    const ImageAlgebra image = image_algebra(family, lalg, ls.tol, ls.seed);
    const bool rank_nullity = image.dim() + image.null_dim() == lalg.dim();
    checks["rank_nullity"] = rank_nullity;
    ok = ok && rank_nullity;

    json null_basis = json::array();
    for (const auto& coords : image.null_basis)
      null_basis.push_back(lalg.from_vector(coords).to_json(sg));

    // C*-seminorm spot checks on seeded random elements.
    {
      std::mt19937_64 rng(ls.seed);
      std::normal_distribution<double> gauss(0.0, 1.0);
      bool cstar = true;
      double worst = 0.0;
      for (int trial = 0; trial < 50; ++trial) {
        Vec xv(lalg.dim()), yv(lalg.dim());
        for (int i = 0; i < lalg.dim(); ++i) {
          xv(i) = Complex(gauss(rng), gauss(rng));
          yv(i) = Complex(gauss(rng), gauss(rng));
        }
        const LElement x = lalg.from_vector(xv), y = lalg.from_vector(yv);
        const double nx = seminorm(family, x), ny = seminorm(family, y);
        const double c_identity =
            std::abs(seminorm(family, lalg.convolve(lalg.star(x), x)) - nx * nx);
        const double submult =
            std::max(0.0, seminorm(family, lalg.convolve(x, y)) - nx * ny);
        worst = std::max({worst, c_identity / std::max(1.0, nx * nx), submult});
        if (c_identity > ls.tol * std::max(1.0, nx * nx) * 100 || submult > ls.tol * 100)
          cstar = false;
      }
      checks["seminorm_cstar"] = {{"passed", cstar}, {"max_residual", worst}};
      ok = ok && cstar;
    }

    json collapsed = json::array();
    for (int s = 0; s < sg.size(); ++s) {
      for (int t = 0; t < sg.size(); ++t) {
        if (!natural_leq(sg, s, t)) continue;
        const ValidationReport oc = order_collapse_check(family, lalg, s, t, ls.tol);
        double worst = 0.0;
        for (const auto& f : oc.failures()) worst = std::max(worst, f.residual);
        collapsed.push_back({{"s", sg.name(s)},
                             {"t", sg.name(t)},
                             {"passed", oc.passed()},
                             {"max_residual", worst}});
        ok = ok && oc.passed();
      }
    }

    if (is_semilattice(sg)) {
      const ValidationReport sl = semilattice_iso_check(family, lalg, image, ls.tol);
      checks["semilattice"] = sl.to_json();
      ok = ok && sl.passed();
    }

    const ValidationReport rt = roundtrip_check(family, lalg, image, 1e-12);
    checks["roundtrip"] = rt.to_json();
    ok = ok && rt.passed();

    json family_names = json::array();
    for (const auto& rep : family.reps) family_names.push_back(rep.name);
    json report = {{"command", "crossed"},
                   {"scenario", opt.path},
                   {"tolerance", ls.tol},
                   {"seed", ls.seed},
                   {"family", family_names},
                   {"dimL", lalg.dim()},
                   {"dimImage", image.dim()},
                   {"dimNull", image.null_dim()},
                   {"null_basis", null_basis},
                   {"blocks", image.blocks},
                   {"collapsed_pairs", collapsed},
                   {"checks", checks},
                   {"passed", ok}};

    std::string text = "crossed " + opt.path + ": " + verdict(ok) + "\n";
    text += "  dim L = " + std::to_string(lalg.dim()) +
            ", dim image = " + std::to_string(image.dim()) +
            ", dim null = " + std::to_string(image.null_dim()) + "\n";
    text += "  blocks = [";
    for (std::size_t i = 0; i < image.blocks.size(); ++i)
      text += (i ? "," : "") + std::to_string(image.blocks[i]);
    text += "]\n";
    text += "  collapsed pairs: " + std::to_string(collapsed.size()) + "\n";
    emit(opt, os, report, text);
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    es << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    es << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_equivalence(const CliOptions& opt, std::ostream& os, std::ostream& es) {
  try {
    const LoadedScenario ls = load(opt, es);
    const PartialAction& pa = *ls.scenario.action;

    ValidationOutcome v = run_validation(ls);
    if (!v.passed) {
      json report = {{"command", "equivalence"},
                     {"scenario", opt.path},
                     {"validation", v.report},
                     {"passed", false}};
      emit(opt, os, report, "equivalence " + opt.path + ": FAIL (scenario does not validate)\n");
      return 1;
    }

    const MatrixRep& rep = ls.family.front();
    log_line(es, "building S_G from representation '" + rep.name + "'");
    const LiftedSemigroup sg = build_sg(pa, rep, ls.tol);

    bool ok = true;
    json checks;

    const PartialAction beta = beta_action(sg);
    const ValidationReport beta_axioms = validate_axioms(beta);
    checks["beta_axioms"] = beta_axioms.to_json();
    ok = ok && beta_axioms.passed();

    const ValidationReport beta_mult = check_beta_multiplicativity(sg);
    checks["beta_full_multiplicativity"] = beta_mult.to_json();
    ok = ok && beta_mult.passed();

    const ValidationReport key = check_sg_key_identity(sg);
    checks["key_identity"] = key.to_json();
    ok = ok && key.passed();

    const MatrixRep nu = nu_from_u(sg, rep);
    const ValidationReport nu_cov = validate_covariant(beta, nu, ls.tol);
    checks["nu_covariant"] = nu_cov.to_json();
    ok = ok && nu_cov.passed();

    // omega round trip: restricting nu back along g -> (alpha_g, u_g)
    // recovers u exactly.
    {
      const MatrixRep omega = omega_from_z(sg, nu, pa, ls.tol);
      double worst = 0.0;
      for (int g = 0; g < pa.semigroup().size(); ++g)
        worst = std::max(worst, linalg::operator_norm(omega.u[g] - rep.u[g]));
      checks["omega_roundtrip"] = {{"passed", worst <= 1e-12}, {"max_residual", worst}};
      ok = ok && worst <= 1e-12;
    }

    auto lalg_g = std::make_shared<LAlgebra>(ls.scenario.action);
    auto beta_ptr = std::make_shared<PartialAction>(beta);
    auto lalg_s = std::make_shared<LAlgebra>(beta_ptr);
    const RepFamily family_g{ls.family};
    const RepFamily family_s{{nu}};

    const EquivalenceReport eq =
        theta_check(pa, rep, sg, family_g, family_s, *lalg_g, *lalg_s, ls.tol, ls.seed);
    ok = ok && eq.passed();

    json report = {{"command", "equivalence"},
                   {"scenario", opt.path},
                   {"tolerance", ls.tol},
                   {"seed", ls.seed},
                   {"sg_size", sg.size()},
                   {"sg", sg.to_json()},
                   {"checks", checks},
                   {"equivalence", eq.to_json()},
                   {"passed", ok}};

    std::string text = "equivalence " + opt.path + ": " + verdict(ok) + "\n";
    text += "  |S_G| = " + std::to_string(sg.size()) + "\n";
    text += "  beta action valid: " + verdict(beta_axioms.passed()) + "\n";
    text += "  span equal: " + verdict(eq.span_equal) +
            ", theta iso: " + verdict(eq.theta_iso) + "\n";
    text += "  blocks: G=[";
    for (std::size_t i = 0; i < eq.blocks_g.size(); ++i)
      text += (i ? "," : "") + std::to_string(eq.blocks_g[i]);
    text += "] S=[";
    for (std::size_t i = 0; i < eq.blocks_s.size(); ++i)
      text += (i ? "," : "") + std::to_string(eq.blocks_s[i]);
    text += "]\n";
    emit(opt, os, report, text);
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    es << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    es << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace isgx
