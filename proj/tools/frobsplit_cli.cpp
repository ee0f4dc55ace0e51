// Command-line front end: one job per invocation, JSON on standard output.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed job.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "frobsplit/acceptance.hpp"
#include "frobsplit/gvd.hpp"
#include "frobsplit/klvariety.hpp"

using namespace frobsplit;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kSchemaError = 2;

struct RingArgs {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::string vars = "x";
};

struct Ring {
  PrimeField field;
  VariableNames names;
  std::size_t n;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    const auto a = t.find_first_not_of(' ');
    const auto b = t.find_last_not_of(' ');
    t = a == std::string::npos ? "" : t.substr(a, b - a + 1);
  }
  return out;
}

// Variable scheme: x (x1..xn), c (c1..cn), gvd (h1..h(n-1), l), m (n x n
// matrix m11..), or an explicit comma-separated list of names.
Ring make_ring(const RingArgs& a, const std::vector<std::string>& texts) {
  if (a.p == 0) throw PreconditionError("--p is required");
  PrimeField F(a.p);
  std::string all;
  for (const auto& t : texts) all += t + " ";
  if (a.vars == "x" || a.vars == "c") {
    std::size_t n = a.n ? a.n : infer_arity(all, a.vars);
    if (n == 0) n = 1;
    return {F, VariableNames::indexed(a.vars, n), n};
  }
  if (a.vars == "gvd") {
    const std::size_t n = a.n ? a.n : infer_arity(all, "h") + 1;
    return {F, VariableNames::gvd(n), n};
  }
  if (a.vars == "m") {
    if (a.n == 0) throw PreconditionError("--n (the matrix size) is required with --vars m");
    return {F, VariableNames::matrix("m", a.n, a.n), a.n * a.n};
  }
  auto names = split_list(a.vars);
  if (a.n && a.n != names.size()) throw PreconditionError("--n disagrees with the variable list");
  return {F, VariableNames(names), names.size()};
}

PrimePoly parse(const Ring& R, const std::string& s) { return parse_polynomial(s, R.field, R.names); }

PolyIdeal parse_ideal(const Ring& R, const std::string& gens) {
  std::vector<PrimePoly> v;
  for (const auto& g : split_list(gens))
    if (!g.empty()) v.push_back(parse(R, g));
  return PolyIdeal(R.field, R.n, std::move(v));
}

WeightOrder parse_order(const std::string& s, std::size_t n) {
  if (s == "lex") return WeightOrder::lex(n);
  if (s == "grlex") return WeightOrder::grlex(n);
  auto numbers = [](const std::string& body) {
    std::vector<long long> v;
    for (const auto& t : split_list(body)) {
      try {
        v.push_back(std::stoll(t));
      } catch (const std::exception&) {
        throw ParseError("bad integer in order: " + t);
      }
    }
    return v;
  };
  if (s.rfind("lex:", 0) == 0) {
    std::vector<std::size_t> perm;
    for (auto v : numbers(s.substr(4))) {
      if (v < 0) throw ParseError("negative variable index in order");
      perm.push_back(static_cast<std::size_t>(v));
    }
    if (perm.size() != n) throw ArityMismatch("lex permutation must list every variable");
    return WeightOrder::lex(std::move(perm));
  }
  if (s.rfind("weight:", 0) == 0) {
    auto w = numbers(s.substr(7));
    if (w.size() != n) throw ArityMismatch("weight vector must have one entry per variable");
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    return WeightOrder(n, std::vector<std::vector<long long>>{w}, id);
  }
  throw ParseError("order must be lex, grlex, lex:<perm> or weight:<w>");
}

Json poly_list(const std::vector<PrimePoly>& polys, const VariableNames& names) {
  Json out = Json::array();
  for (const auto& g : polys) out.push_back(to_string(g, names));
  return out;
}

Json monomial_list(const MonomialIdeal& M, const VariableNames& names, const PrimeField& F) {
  Json out = Json::array();
  for (const auto& m : M.generators()) out.push_back(to_string(PrimePoly::term(F, m, 1), names));
  return out;
}

Json basis(const PolyIdeal& I, const VariableNames& names) { return poly_list(I.groebner_basis(), names); }

VariableNames without(const VariableNames& names, std::size_t skip) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (i != skip) out.push_back(names[i]);
  return VariableNames(out);
}

std::string kind_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const ArityMismatch*>(&e)) return "arity";
  if (dynamic_cast<const DomainMismatch*>(&e)) return "domain";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "invariant";
  return "internal";
}

int emit(const Json& j, int code) {
  std::cout << j.dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------------------

struct SplitCheckArgs {
  std::string f;
  std::vector<std::string> ideals;
  std::string strategy = "auto";
};

int run_split_check(const RingArgs& ra, const SplitCheckArgs& a, std::uint64_t oracle_budget) {
  std::vector<std::string> texts{a.f};
  texts.insert(texts.end(), a.ideals.begin(), a.ideals.end());
  auto R = make_ring(ra, texts);
  CompatOptions opts;
  opts.budget = oracle_budget;
  if (a.strategy == "oracle")
    opts.strategy = CompatStrategy::Oracle;
  else if (a.strategy == "fedder")
    opts.strategy = CompatStrategy::Fedder;
  else if (a.strategy != "auto")
    throw ParseError("strategy must be auto, oracle or fedder");
  auto f = parse(R, a.f);
  SplittingSpec spec(f);
  Json out;
  out["p"] = R.field.characteristic();
  out["n"] = R.n;
  out["f"] = to_string(f, R.names);
  if (spec.constant)
    out["splitting_constant"] = spec.constant->value();
  else
    out["splitting_constant"] = nullptr;
  out["is_splitting"] = spec.is_splitting();
  bool ok = spec.is_splitting();
  Json ideals = Json::array();
  for (const auto& text : a.ideals) {
    auto I = parse_ideal(R, text);
    const bool split = is_compatibly_split(I, spec, opts);
    ok = ok && split;
    ideals.push_back(Json{{"generators", basis(I, R.names)}, {"compatibly_split", split}});
  }
  out["ideals"] = ideals;
  return emit(out, ok ? kOk : kVerificationFailed);
}

struct CountArgs {
  std::vector<std::string> system;
  bool congruence = false;
};

int run_count(const RingArgs& ra, const CountArgs& a, std::uint64_t budget) {
  auto R = make_ring(ra, a.system);
  std::vector<PrimePoly> sys;
  for (const auto& s : a.system) sys.push_back(parse(R, s));
  Json out;
  out["count"] = count_points(sys, R.field, R.n, budget);
  if (!a.congruence) return emit(out, kOk);
  if (sys.size() != 1) throw PreconditionError("--congruence needs a single polynomial");
  auto r = check_pointcount_congruence(sys[0], budget);
  out["count_mod_p"] = r.count_mod_p;
  out["predicted_mod_p"] = r.predicted_mod_p;
  out["congruence_holds"] = r.ok;
  return emit(out, r.ok ? kOk : kVerificationFailed);
}

struct GvdArgs {
  std::vector<std::string> gens;
  std::string ell;
  bool count = false;
};

int run_gvd(RingArgs ra, const GvdArgs& a, std::uint64_t budget) {
  if (ra.vars == "x") ra.vars = "gvd";
  std::string joined;
  for (const auto& g : a.gens) joined += g + ",";
  auto R = make_ring(ra, {joined});
  auto I = parse_ideal(R, joined);
  std::size_t ell = R.n - 1;
  if (!a.ell.empty()) {
    ell = R.names.find(a.ell);
    if (ell == R.names.size()) throw PreconditionError("unknown line variable: " + a.ell);
  }
  auto d = compute_gvd(I, ell);
  auto H = without(R.names, ell);
  Json out;
  out["ell"] = R.names[ell];
  out["X"] = basis(d.X, R.names);
  out["X_limit"] = basis(d.X_limit, R.names);
  out["Pi"] = basis(d.Pi, H);
  out["Lambda"] = basis(d.Lambda, H);
  out["Lambda_prime"] = basis(d.Lambda_prime, H);
  out["Lambda_prime_radical_certificate"] = radicality_certificate(d.Lambda_prime);
  if (d.split) out["split"] = Json{{"g1", to_string(d.split->g1, R.names)}, {"g2", to_string(d.split->g2, R.names)}};
  if (!a.count) return emit(out, kOk);
  auto r = verify_class_identity(d, budget);
  auto iota_report = check_iota(d, budget);
  out["counts"] = Json{{"X", r.x},           {"X_limit", r.x_limit},         {"Pi", r.pi},
                       {"Lambda", r.lambda}, {"Lambda_prime", r.lambda_prime}};
  out["nested"] = r.nested;
  out["set_formula"] = r.set_formula;
  out["class_identity"] = r.identity;
  out["iota"] = Json{{"injective", iota_report.injective},
                     {"image_on_limit", iota_report.image_on_limit},
                     {"complement_is_cylinder", iota_report.complement_is_cylinder}};
  return emit(out, r.ok() && iota_report.ok() ? kOk : kVerificationFailed);
}

struct GroebnerArgs {
  std::vector<std::string> gens;
  std::string order = "grlex";
};

int run_groebner(const RingArgs& ra, const GroebnerArgs& a) {
  std::string joined;
  for (const auto& g : a.gens) joined += g + ",";
  auto R = make_ring(ra, {joined});
  auto I = parse_ideal(R, joined);
  auto order = parse_order(a.order, R.n);
  Json out;
  out["order"] = a.order;
  out["basis"] = poly_list(I.groebner_basis(order), R.names);
  out["initial"] = monomial_list(MonomialIdeal::initial(I, order.refined()), R.names, R.field);
  out["unit"] = I.is_unit();
  return emit(out, kOk);
}

struct PosetArgs {
  std::string f;
  std::vector<std::string> seeds, members, factors;
  std::string order = "lex";
  bool dot = false;
};

Json poset_json(const SplitPoset& P, const VariableNames& names) {
  const auto& F = P.f().domain();
  Json members = Json::array();
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& m = P.members()[i];
    members.push_back(Json{{"index", i},
                           {"generators", basis(m.ideal, names)},
                           {"composite", m.composite},
                           {"degeneration", monomial_list(m.degen, names, F)},
                           {"dimension", m.dim_degree.dimension},
                           {"degree", m.dim_degree.degree}});
  }
  Json out;
  out["f"] = to_string(P.f(), names);
  out["members"] = members;
  auto Q = P.resolved_poset();
  auto ids = P.resolved();
  Json covers = Json::array();
  for (auto [lo, hi] : Q.covers()) covers.push_back(Json::array({ids[lo], ids[hi]}));
  out["covers"] = covers;
  Json basic = Json::array();
  for (auto b : basic_elements(Q)) basic.push_back(ids[b]);
  out["basic"] = basic;
  return out;
}

int run_poset(const RingArgs& ra, const PosetArgs& a) {
  std::vector<std::string> texts{a.f};
  for (const auto* list : {&a.seeds, &a.members, &a.factors}) texts.insert(texts.end(), list->begin(), list->end());
  auto R = make_ring(ra, texts);
  auto f = parse(R, a.f);
  auto order = parse_order(a.order, R.n);
  std::optional<SplitPoset> P;
  if (!a.members.empty()) {
    std::vector<PolyIdeal> members;
    for (const auto& m : a.members) members.push_back(parse_ideal(R, m));
    P = SplitPoset::from_members(f, members, order);
  } else {
    if (a.seeds.empty()) throw PreconditionError("give --seed ideals for the closure or --member ideals");
    std::vector<PolyIdeal> seeds;
    for (const auto& s : a.seeds) seeds.push_back(parse_ideal(R, s));
    std::vector<PrimePoly> factors;
    for (const auto& g : a.factors) factors.push_back(parse(R, g));
    auto hook = factors.empty() ? monomial_hook() : combine_hooks({monomial_hook(), factor_hook(factors)});
    ClosureOptions opts;
    opts.order = order;
    P = closure_algorithm(seeds, f, hook, opts);
  }
  if (a.dot) {
    std::cout << to_dot(P->resolved_poset(), "split_poset");
    return kOk;
  }
  Json out = poset_json(*P, R.names);
  bool ok = true;
  try {
    auto r = check_poset_map(*P);
    Json pi = Json::array();
    for (const auto& [S, m] : r.pi) {
      Json vars = Json::array();
      for (auto v : S) vars.push_back(R.names[v]);
      pi.push_back(Json{{"zero", vars}, {"member", m}});
    }
    out["degeneration_map"] = pi;
    out["order_preserving"] = r.order_preserving;
    out["surjective"] = r.surjective;
    out["two_sided"] = r.two_sided;
    out["dimension_bound"] = r.dimension_bound;
    out["count_bound"] = r.count_bound;
    ok = r.ok();
  } catch (const PreconditionError& e) {
    // The map needs a squarefree leading term of f.
    out["degeneration_map"] = nullptr;
    out["degeneration_map_note"] = e.what();
  }
  if (f.is_homogeneous() && out["degeneration_map"] != nullptr) {
    auto d = degree_identity_check(*P);
    out["degree_identity"] = d.ok;
    ok = ok && d.ok;
  }
  return emit(out, ok ? kOk : kVerificationFailed);
}

struct SchubertArgs {
  std::size_t n = 3;
  std::string perm;
};

Json matrix_json(const std::vector<std::vector<unsigned>>& r, std::size_t n) {
  Json out = Json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= n; ++j) row.push_back(r[i][j]);
    out.push_back(row);
  }
  return out;
}

int run_schubert(std::uint32_t p, const SchubertArgs& a) {
  if (p == 0) throw PreconditionError("--p is required");
  PrimeField F(p);
  if (!a.perm.empty()) {
    auto w = Permutation::parse(a.perm);
    const std::size_t n = w.size();
    auto names = VariableNames::matrix("m", n, n);
    auto rc = rank_conditions(w);
    Json ess = Json::array();
    for (const auto& e : rc.essential) ess.push_back(Json{{"row", e.row}, {"col", e.col}, {"rank", e.rank}});
    auto I = fulton_generators(w, F, n * n);
    auto order = antidiagonal_weight(n, n);
    auto init = MonomialIdeal::initial(I, order);
    Json out;
    out["permutation"] = w.to_string();
    out["length"] = w.length();
    out["rank_matrix"] = matrix_json(rc.rank, n);
    out["essential_set"] = ess;
    out["fulton_generators"] = poly_list(I.generators(), names);
    out["antidiagonal_initial"] = monomial_list(init, names, F);
    const bool matches = init == fulton_antidiagonal_ideal(w);
    out["generators_are_groebner"] = matches;
    out["codimension"] = static_cast<long>(n * n) - monomial_dim_degree(init).dimension;
    return emit(out, matches ? kOk : kVerificationFailed);
  }
  auto S = generate_matrix_schuberts(a.n, p);
  auto names = VariableNames::matrix("m", a.n, a.n);
  Json perms = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < S.perms.size(); ++i) {
    const auto& m = S.poset.members()[S.member_of[i]];
    const long codim = static_cast<long>(a.n * a.n) - m.dim_degree.dimension;
    ok = ok && codim == static_cast<long>(S.perms[i].length()) && m.degen.is_squarefree();
    perms.push_back(Json{{"permutation", S.perms[i].to_string()},
                         {"member", S.member_of[i]},
                         {"codimension", codim},
                         {"degree", m.dim_degree.degree},
                         {"degeneration", monomial_list(m.degen, names, F)}});
  }
  auto Q = schubert_containment_poset(a.n);
  Json covers = Json::array();
  for (auto [lo, hi] : Q.covers()) covers.push_back(Json::array({Q.label(lo), Q.label(hi)}));
  Json basic = Json::array();
  for (auto b : basic_elements(Q)) {
    basic.push_back(Q.label(b));
    ok = ok && bigrassmannian(S.perms[b]);
  }
  Json out;
  out["n"] = a.n;
  out["p"] = p;
  out["members"] = S.poset.size();
  out["permutations"] = perms;
  out["containment_covers"] = covers;
  out["basic"] = basic;
  return emit(out, ok ? kOk : kVerificationFailed);
}

struct KlArgs {
  std::size_t n = 0;
  std::string word;
  std::string w;
};

int run_kl(std::uint32_t p, const KlArgs& a) {
  if (a.n == 0) throw PreconditionError("--n is required");
  auto Q = ReducedWord::parse(a.n, a.word);
  const std::size_t N = Q.size();
  auto names = VariableNames::indexed("c", N);
  auto M = bott_samelson_matrix(Q);
  Json matrix = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e, names));
    matrix.push_back(r);
  }
  Json minors = Json::array();
  for (std::size_t i = 1; i < a.n; ++i) minors.push_back(to_string(upper_left_minor(M, i), names));
  Json out;
  out["word"] = Q.entries();
  out["v"] = Q.target().to_string();
  out["matrix"] = matrix;
  out["minors"] = minors;
  bool ok = true;
  try {
    auto f = kl_splitting_poly(Q);
    out["f"] = to_string(f, names);
    out["lex_initial_is_product"] = true;
  } catch (const InvariantViolation&) {
    out["lex_initial_is_product"] = false;
    ok = false;
  }
  if (!a.w.empty()) {
    if (p == 0) throw PreconditionError("--p is required with --w");
    auto w = Permutation::parse(a.w);
    auto I = kl_ideal(Q, w, p);
    auto init = MonomialIdeal::initial(I, WeightOrder::lex(N));
    auto sr = subword_complex(Q, w);
    PrimeField F(p);
    out["w"] = w.to_string();
    out["ideal_lex_basis"] = poly_list(I.groebner_basis(WeightOrder::lex(N)), names);
    out["lex_initial"] = monomial_list(init, names, F);
    out["subword_complex"] = monomial_list(sr, names, F);
    out["initial_is_subword_complex"] = init == sr;
    ok = ok && init == sr;
  }
  return emit(out, ok ? kOk : kVerificationFailed);
}

Json criterion_json(const CriterionResult& r) {
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  return Json{{"criterion", r.id}, {"fixture", r.name}, {"pass", r.pass}, {"metrics", metrics}, {"failures", r.failures}};
}

int run_reproduce(const std::string& fixture, const AcceptanceOptions& opts) {
  if (fixture == "all") {
    Json out = Json::array();
    bool ok = true;
    for (const auto& fx : acceptance_fixtures()) {
      auto r = run_criterion(fx.id, opts);
      ok = ok && r.pass;
      out.push_back(criterion_json(r));
    }
    return emit(out, ok ? kOk : kVerificationFailed);
  }
  auto r = run_criterion(fixture_by_name(fixture).id, opts);
  return emit(criterion_json(r), r.pass ? kOk : kVerificationFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius splittings, point counts and degenerations over F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--budget", budget_flag, "Cap on enumerated points and on compatibility-oracle work");

  RingArgs ring;
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--p", ring.p, "Prime characteristic");
    sub->add_option("--n", ring.n, "Number of variables (inferred when omitted)");
    sub->add_option("--vars", ring.vars, "x, c, gvd, m, or a comma-separated list of names");
  };

  SplitCheckArgs split_args;
  auto* split = app.add_subcommand("split-check", "Splitting constant of f and compatibility of ideals");
  add_ring(split);
  split->add_option("--f", split_args.f, "Polynomial f")->required();
  split->add_option("--ideal", split_args.ideals, "Comma-separated generators of an ideal (repeatable)");
  split->add_option("--strategy", split_args.strategy, "auto, oracle or fedder");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Number of F_p-points of a system");
  add_ring(count);
  count->add_option("--f", count_args.system, "Polynomial of the system (repeatable)")->required();
  count->add_flag("--congruence", count_args.congruence, "Compare with the trace prediction");

  GvdArgs gvd_args;
  auto* gvd = app.add_subcommand("gvd", "Geometric vertex decomposition along one coordinate");
  add_ring(gvd);
  gvd->add_option("--gen", gvd_args.gens, "Generator (repeatable)")->required();
  gvd->add_option("--ell", gvd_args.ell, "Name of the line coordinate (default: last variable)");
  gvd->add_flag("--count", gvd_args.count, "Verify the point-count identity and the map iota");

  GroebnerArgs gb_args;
  auto* gb = app.add_subcommand("groebner", "Reduced Groebner basis and initial ideal");
  add_ring(gb);
  gb->add_option("--gen", gb_args.gens, "Generator (repeatable)")->required();
  gb->add_option("--order", gb_args.order, "lex, grlex, lex:<perm> or weight:<w>");

  PosetArgs poset_args;
  auto* poset = app.add_subcommand("poset", "Poset of compatibly split ideals");
  add_ring(poset);
  poset->add_option("--f", poset_args.f, "Splitting polynomial")->required();
  poset->add_option("--seed", poset_args.seeds, "Seed ideal for the closure (repeatable)");
  poset->add_option("--member", poset_args.members, "Hand-registered member ideal (repeatable)");
  poset->add_option("--factor", poset_args.factors, "Known irreducible factor for decompositions (repeatable)");
  poset->add_option("--order", poset_args.order, "Degeneration order");
  poset->add_flag("--dot", poset_args.dot, "Print the Hasse diagram in DOT instead of JSON");

  SchubertArgs sch_args;
  auto* sch = app.add_subcommand("schubert", "Matrix Schubert varieties");
  sch->add_option("--p", ring.p, "Prime characteristic")->required();
  sch->add_option("--n", sch_args.n, "Matrix size for the generated poset");
  sch->add_option("--perm", sch_args.perm, "A single permutation in one-line notation");

  KlArgs kl_args;
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig varieties in Bott-Samelson coordinates");
  kl->add_option("--p", ring.p, "Prime characteristic (needed with --w)");
  kl->add_option("--n", kl_args.n, "Size of the permutations")->required();
  kl->add_option("--word", kl_args.word, "Reduced word, e.g. 1,2,3,2")->required();
  kl->add_option("--w", kl_args.w, "Permutation below the word's product");

  std::string fixture;
  AcceptanceOptions acc;
  std::uint32_t acc_p = 0;
  auto* rep = app.add_subcommand("reproduce", "Replay an acceptance fixture");
  rep->add_option("fixture", fixture, "Fixture id, or all")->required();
  rep->add_option("--p", acc_p, "Run the fixture at this prime only");
  rep->add_option("--seed", acc.seed, "Seed for the random sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit(Json{{"error", Json{{"kind", "schema"}, {"message", e.what()}}}}, kSchemaError);
  }

  const std::uint64_t budget = budget_flag.value_or(kDefaultPointBudget);
  try {
    if (*split) return run_split_check(ring, split_args, budget_flag.value_or(CompatOptions{}.budget));
    if (*count) return run_count(ring, count_args, budget);
    if (*gvd) return run_gvd(ring, gvd_args, budget);
    if (*gb) return run_groebner(ring, gb_args);
    if (*poset) return run_poset(ring, poset_args);
    if (*sch) return run_schubert(ring.p, sch_args);
    if (*kl) return run_kl(ring.p, kl_args);
    if (*rep) {
      if (acc_p) acc.p = acc_p;
      acc.budget = budget;
      return run_reproduce(fixture, acc);
    }
  } catch (const std::exception& e) {
    const auto kind = kind_of(e);
    const int code = kind == "invariant" || kind == "internal" ? kVerificationFailed : kSchemaError;
    return emit(Json{{"error", Json{{"kind", kind}, {"message", e.what()}}}}, code);
  }
  return kSchemaError;
}
