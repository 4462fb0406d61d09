#include "freestar/cli_impl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "freestar/functional.hpp"
#include "freestar/gns.hpp"
#include "freestar/parser.hpp"
#include "freestar/problem.hpp"
#include "freestar/quotients.hpp"

namespace freestar {

using nlohmann::json;

namespace {

json poly_list(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_poly(p));
  return out;
}

json word_list(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(word_str(w));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m.at(i, j)));
    out.push_back(row);
  }
  return out;
}

json gb_json(const GroebnerBasis& gb) {
  json rules = json::array();
  for (const auto& r : gb.rules()) rules.push_back(format_poly(r.poly()));
  json out;
  out["rules"] = rules;
  out["complete"] = gb.complete();
  out["completion_degree"] = gb.completion_degree();
  out["discarded_overlaps"] = word_list(gb.discarded_overlaps());
  return out;
}

int max_var_index(const std::string& s) {
  int g = 1;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != 'x' || !std::isdigit(static_cast<unsigned char>(s[i + 1]))) continue;
    int v = 0;
    size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
      v = v * 10 + (s[j++] - '0');
    g = std::max(g, v);
  }
  return g;
}

struct Ctx {
  std::string problem_path;
  std::string poly_text;
  std::string field_text = "Q";
  std::string q_text;
  std::string algebra = "toeplitz";
  int degree = -1;
  bool json_flag = true;

  std::optional<ProblemFile> pf;

  void load() {
    if (!problem_path.empty()) pf = load_problem(problem_path);
  }
  FieldMode field() const {
    if (pf) return pf->field;
    if (field_text == "Q") return FieldMode::Rational;
    if (field_text == "Qi") return FieldMode::GaussianRational;
    throw PreconditionError("field must be Q or Qi");
  }
  int g_for_poly() const {
    if (pf) return pf->g;
    return max_var_index(poly_text);
  }
  int degree_or(int fallback) const {
    if (degree >= 0) return degree;
    if (pf && pf->degree > 0) return pf->degree;
    return fallback;
  }
  Polynomial poly() const {
    if (poly_text.empty()) throw PreconditionError("this command needs --poly");
    return parse_poly(poly_text, g_for_poly(), field());
  }
  const ProblemFile& problem() const {
    if (!pf) throw PreconditionError("this command needs --problem");
    return *pf;
  }
  IdealPresentation presentation() const {
    return IdealPresentation::from_generators(problem().generators);
  }
  GroebnerBasis gb() const {
    int D = degree >= 0 ? degree : problem().degree;
    if (D <= 0) throw PreconditionError("a positive truncation degree is required");
    return complete(presentation(), D);
  }
  const MatrixTuple& first_tuple() const {
    if (problem().matrices.empty()) throw PreconditionError("this command needs a matrix tuple");
    return problem().matrices.begin()->second;
  }
  std::vector<MatrixTuple> all_tuples() const {
    std::vector<MatrixTuple> out;
    for (const auto& [name, t] : problem().matrices) out.push_back(t);
    if (out.empty()) throw PreconditionError("this command needs matrix tuples");
    return out;
  }
  std::vector<Scalar> first_vector() const {
    if (problem().vectors.empty()) throw PreconditionError("this command needs a vector");
    return problem().vectors.begin()->second;
  }
  Rational q_value() const {
    if (!q_text.empty()) return Rational::from_string(q_text);
    if (pf && pf->q) return *pf->q;
    throw PreconditionError("this command needs --q");
  }
};

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    default: return "unknown_beyond_bound";
  }
}

const char* verdict_name(CodimVerdict v) {
  switch (v) {
    case CodimVerdict::finite: return "finite";
    case CodimVerdict::infinite: return "infinite";
    default: return "unknown";
  }
}

const char* label_name(CommutantLabel l) {
  switch (l) {
    case CommutantLabel::reducible: return "reducible";
    case CommutantLabel::full_real: return "full_real";
    case CommutantLabel::complex_type: return "complex_type";
    case CommutantLabel::quaternion_type: return "quaternion_type";
    default: return "full_complex";
  }
}

using Handler = std::function<int(Ctx&, json&)>;

int cmd_gb(Ctx& ctx, json& out) {
  out["basis"] = gb_json(ctx.gb());
  return 0;
}

int cmd_reduce(Ctx& ctx, json& out) {
  GroebnerBasis gb = ctx.gb();
  Polynomial nf = gb.reduce(ctx.poly());
  out["canonical_form"] = format_poly(nf);
  out["exact"] = gb.exact_at_degree(ctx.poly().degree());
  return 0;
}

int cmd_member(Ctx& ctx, json& out) {
  Membership m = ctx.gb().member(ctx.poly());
  out["verdict"] = membership_name(m);
  if (m == Membership::member) return 0;
  return m == Membership::non_member ? 1 : 3;
}

int cmd_standard_monomials(Ctx& ctx, json& out) {
  GroebnerBasis gb = ctx.gb();
  int d = ctx.degree_or(gb.completion_degree());
  out["standard_monomials"] = word_list(standard_monomials(gb, d));
  return 0;
}

int cmd_codim(Ctx& ctx, json& out) {
  CodimResult r = finite_codimension(ctx.gb());
  out["verdict"] = verdict_name(r.verdict);
  if (r.codim) out["codim"] = *r.codim;
  return r.verdict == CodimVerdict::unknown ? 3 : 0;
}

int cmd_split_check(Ctx& ctx, json& out) {
  SplitCheck sc = star_split_check(ctx.gb(), ctx.presentation());
  out["holds"] = sc.holds;
  out["analytic_part"] = poly_list(sc.analytic_part);
  out["antianalytic_part"] = poly_list(sc.antianalytic_part);
  return sc.holds ? 0 : 1;
}

int cmd_functional(Ctx& ctx, json& out) {
  int d = ctx.degree_or(ctx.problem().degree);
  MomentFunctional L = build_functional(ctx.gb(), d);
  json cs = json::array();
  for (const auto& c : L.constants()) cs.push_back(c.str());
  out["constants"] = cs;
  out["max_eval_degree"] = L.max_eval_degree();
  return 0;
}

int cmd_verify_functional(Ctx& ctx, json& out) {
  int d = ctx.degree_or(ctx.problem().degree);
  MomentFunctional L = build_functional(ctx.gb(), d);
  FunctionalReport rep = verify_functional(L, d);
  out["hermitian"] = rep.hermitian_ok;
  out["vanishes_on_ideal"] = rep.vanishes_on_ideal;
  out["moment_positive_definite"] = rep.moment_positive_definite;
  json minors = json::array();
  for (const auto& m : rep.minors) minors.push_back(format_scalar(m));
  out["minors"] = minors;
  return rep.ok() ? 0 : 1;
}

int cmd_witness(Ctx& ctx, json& out) {
  int d = ctx.degree >= 0 ? ctx.degree : 1;
  GNSWitness w = build_witness(ctx.presentation(), d);
  out["dim"] = w.dim();
  out["basis"] = word_list(w.basis);
  out["gram"] = matrix_json(w.gram);
  json xs = json::array(), adjs = json::array();
  for (const auto& m : w.Xop) xs.push_back(matrix_json(m));
  for (const auto& m : w.Xadj) adjs.push_back(matrix_json(m));
  out["Xop"] = xs;
  out["Xadj"] = adjs;
  return 0;
}

int cmd_verify_witness(Ctx& ctx, json& out) {
  int d = ctx.degree >= 0 ? ctx.degree : 1;
  IdealPresentation I = ctx.presentation();
  GNSWitness w = build_witness(I, d);
  std::vector<Polynomial> probes;
  if (!ctx.poly_text.empty()) {
    probes.push_back(parse_poly(ctx.poly_text, ctx.problem().g, ctx.problem().field));
  } else {
    for (const auto& m : standard_monomials(w.gb, d))
      probes.push_back(Polynomial::monomial(w.g, w.field, m));
  }
  WitnessReport rep = verify_witness(w, I, probes);
  out["generators_vanish"] = rep.generators_vanish;
  out["probes_separate"] = rep.probes_separate;
  out["adjoint_identity"] = rep.adjoint_identity;
  out["probes"] = static_cast<int>(probes.size());
  return rep.ok() ? 0 : 1;
}

int cmd_bounded_family(Ctx& ctx, json& out) {
  int d_max = ctx.degree >= 0 ? ctx.degree : 1;
  json fam = json::array();
  for (const auto& sw : bounded_family(ctx.presentation(), d_max)) {
    json e;
    e["dim"] = sw.witness.dim();
    e["scale"] = sw.scale.str();
    e["norm_bound"] = sw.norm_bound.str();
    fam.push_back(e);
  }
  out["family"] = fam;
  return 0;
}

int cmd_eval(Ctx& ctx, json& out) {
  if (ctx.poly_text.empty()) throw PreconditionError("eval needs --poly");
  Polynomial p = parse_poly(ctx.poly_text, ctx.problem().g, ctx.problem().field);
  out["value"] = matrix_json(evaluate_at(p, ctx.first_tuple()));
  return 0;
}

int cmd_zero_class(Ctx& ctx, json& out) {
  Polynomial p = parse_poly(ctx.poly_text, ctx.problem().g, ctx.problem().field);
  ZeroClass z = zero_class(p, ctx.first_tuple());
  out["class"] = z == ZeroClass::hard ? "hard" : z == ZeroClass::soft_only ? "soft_only" : "nonzero";
  return z == ZeroClass::nonzero ? 1 : 0;
}

int cmd_vanishing_ideal(Ctx& ctx, json& out) {
  int d = ctx.degree_or(ctx.problem().degree);
  out["basis"] = poly_list(vanishing_ideal(ctx.all_tuples(), d));
  return 0;
}

int cmd_left_vanishing_ideal(Ctx& ctx, json& out) {
  int d = ctx.degree_or(ctx.problem().degree);
  out["basis"] = poly_list(left_vanishing_ideal(ctx.first_tuple(), ctx.first_vector(), d));
  return 0;
}

int cmd_commutant(Ctx& ctx, json& out) {
  CommutantType ct = commutant_type(ctx.first_tuple());
  out["commutant_dim"] = ct.commutant_dim;
  out["label"] = label_name(ct.label);
  out["algebra_dim"] = ct.algebra_dim;
  out["hermitian_commutant_dim"] = ct.hermitian_commutant_dim;
  if (ct.invariant_witness) out["invariant_witness"] = *ct.invariant_witness;
  return 0;
}

int cmd_soft_check(Ctx& ctx, json& out) {
  Polynomial p = parse_poly(ctx.poly_text, ctx.problem().g, ctx.problem().field);
  SoftCheckReport rep = soft_condition_check(p, ctx.all_tuples());
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json je;
    je["rep"] = e.rep_index;
    je["soft_zero"] = e.is_soft_zero;
    if (e.is_soft_zero) {
      je["soft_equals_hard"] = e.soft_equals_hard_holds;
      je["hard_zero"] = e.hard_zero;
    }
    entries.push_back(je);
  }
  out["entries"] = entries;
  out["division_image_everywhere"] = rep.division_image_everywhere;
  out["soft_zeros_are_hard"] = rep.soft_zeros_are_hard;
  return rep.division_image_everywhere && rep.soft_zeros_are_hard ? 0 : 1;
}

int cmd_regrep(Ctx& ctx, json& out) {
  FiniteQuotient Q = regular_representation(ctx.gb());
  out["dim"] = Q.dim;
  out["basis"] = word_list(Q.basis);
  json mats = json::array();
  for (const auto& m : Q.letter_action) mats.push_back(matrix_json(m));
  out["letter_action"] = mats;
  return 0;
}

int cmd_z_ideal(Ctx& ctx, json& out) {
  int d = ctx.degree_or(ctx.problem().degree);
  auto left = left_vanishing_ideal(ctx.first_tuple(), ctx.first_vector(), d);
  out["left_basis_rank"] = static_cast<int>(left.size());
  out["basis"] = poly_list(z_ideal(left, d));
  return 0;
}

int cmd_hat_member(Ctx& ctx, json& out) {
  const ProblemFile& pf = ctx.problem();
  FiniteQuotient Q;
  if (!pf.generators.empty()) {
    Q = regular_representation(ctx.gb());
  } else {
    int d = ctx.degree_or(pf.degree);
    auto basis = vanishing_ideal(ctx.all_tuples(), d);
    GroebnerBasis gb = complete(IdealPresentation::from_generators(basis), d);
    Q = regular_representation(gb);
  }
  Polynomial p = parse_poly(ctx.poly_text, pf.g, pf.field);
  bool hat = hat_member(p, Q);
  out["hat_member"] = hat;
  return hat ? 0 : 1;
}

int cmd_canon(Ctx& ctx, json& out) {
  if (ctx.algebra == "toeplitz") {
    Polynomial p = ctx.pf ? parse_poly(ctx.poly_text, 1, ctx.problem().field)
                          : parse_poly(ctx.poly_text, 1, ctx.field());
    out["canonical_form"] = format_poly(toeplitz_canon(p));
    return 0;
  }
  if (ctx.algebra == "qweyl") {
    QWeylSystem S = make_qweyl(ctx.q_value(), std::max(4, ctx.degree_or(5)));
    Polynomial p = parse_poly(ctx.poly_text, 2, FieldMode::Rational);
    out["canonical_form"] = format_poly(qweyl_canon(p, S));
    out["system_rules"] = gb_json(S.gb)["rules"];
    return 0;
  }
  throw PreconditionError("--algebra must be toeplitz or qweyl");
}

int cmd_qweyl_identities(Ctx& ctx, json& out) {
  QWeylSystem S = make_qweyl(ctx.q_value(), std::max(4, ctx.degree_or(5)));
  int m_max = 4;
  std::vector<Rational> ks{Rational(1), Rational(2), Rational(7)};
  QWeylReport rep = verify_qweyl_identities(S, m_max, ks);
  out["k_identity"] = rep.k_identity_ok;
  out["power_identities"] = rep.power_identities_ok;
  out["m_max"] = m_max;
  return rep.ok() ? 0 : 1;
}

int cmd_trace_form(Ctx& ctx, json& out) {
  out["trace_normal_form"] = format_poly(trace_normal_form(ctx.poly()));
  return 0;
}

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"exact toolkit for the free *-algebra"};
  app.require_subcommand(1);

  Ctx ctx;
  std::map<std::string, Handler> handlers = {
      {"gb", cmd_gb},
      {"reduce", cmd_reduce},
      {"member", cmd_member},
      {"standard-monomials", cmd_standard_monomials},
      {"codim", cmd_codim},
      {"split-check", cmd_split_check},
      {"functional", cmd_functional},
      {"verify-functional", cmd_verify_functional},
      {"witness", cmd_witness},
      {"verify-witness", cmd_verify_witness},
      {"bounded-family", cmd_bounded_family},
      {"eval", cmd_eval},
      {"zero-class", cmd_zero_class},
      {"vanishing-ideal", cmd_vanishing_ideal},
      {"left-vanishing-ideal", cmd_left_vanishing_ideal},
      {"commutant", cmd_commutant},
      {"soft-check", cmd_soft_check},
      {"regrep", cmd_regrep},
      {"z-ideal", cmd_z_ideal},
      {"hat-member", cmd_hat_member},
      {"canon", cmd_canon},
      {"qweyl-identities", cmd_qweyl_identities},
      {"trace-form", cmd_trace_form},
  };

  for (auto& [name, fn] : handlers) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--problem", ctx.problem_path);
    sub->add_option("--poly", ctx.poly_text);
    sub->add_option("--degree", ctx.degree);
    sub->add_option("--field", ctx.field_text);
    sub->add_option("--q", ctx.q_text);
    sub->add_flag("--json", ctx.json_flag);
    if (name == "canon") sub->add_option("--algebra", ctx.algebra);
  }

  std::vector<const char*> argv{"freestar"};
  for (const auto& a : args) argv.push_back(a.c_str());

  CliResult res;
  json out;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    std::string cmd = app.get_subcommands().front()->get_name();
    out["command"] = cmd;
    ctx.load();
    res.exit_code = handlers.at(cmd)(ctx, out);
  } catch (const CLI::CallForHelp&) {
    res.output = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    out["error"] = e.what();
    res.exit_code = 2;
  } catch (const ParseError& e) {
    out["error"] = e.what();
    res.exit_code = 2;
  } catch (const PreconditionError& e) {
    out["error"] = e.what();
    res.exit_code = 3;
  } catch (const std::exception& e) {
    out["error"] = e.what();
    res.exit_code = 2;
  }
  res.output = out.dump(2) + "\n";
  return res;
}

}  // namespace freestar
