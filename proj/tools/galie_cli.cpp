#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galie/format.hpp"
#include "galie/galois.hpp"

using namespace galie;
using nlohmann::json;

namespace {

// exit codes: 0 all verdicts hold, 1 a verdict is false, 2 usage/parse error,
// 3 budget exceeded, 4 modular case, 5 enumeration requires a finite field
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitModular = 4;
constexpr int kExitInfinite = 5;

struct Report {
  std::string command;
  bool json_mode = false;
  json doc;
  std::ostringstream text;
  bool all_ok = true;

  explicit Report(std::string cmd, bool jm) : command(std::move(cmd)), json_mode(jm) {
    doc["command"] = command;
    doc["verdicts"] = json::object();
    doc["flags"] = json::object();
    doc["inputs"] = json::object();
    doc["timings"] = json::object();
    doc["budgets"] = json::object();
  }

  void kv(const std::string& key, const std::string& value) {
    text << key << ": " << value << "\n";
    doc[key] = value;
  }
  void kv(const std::string& key, std::size_t value) {
    text << key << ": " << value << "\n";
    doc[key] = value;
  }
  void flag(const std::string& key, bool value) {
    text << key << ": " << (value ? "yes" : "no") << "\n";
    doc["flags"][key] = value;
  }
  void verdict(const std::string& key, bool value) {
    text << key << ": " << (value ? "pass" : "FAIL") << "\n";
    doc["verdicts"][key] = value;
    if (!value) all_ok = false;
  }
  void input(const std::string& key, const std::string& value) { doc["inputs"][key] = value; }

  int finish() {
    if (json_mode)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text.str();
    return all_ok ? 0 : kExitFalse;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string vec_str(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

std::string subspace_str(const Subspace& s) {
  if (s.dim() == 0) return "(zero)";
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? "; " : "") + vec_str(s.basis().row(i));
  return out;
}

// shared input options: an algebra file or a catalog name with a field
struct AlgebraInput {
  std::string algebra_path;
  std::string catalog_name;
  std::string field_name;

  void attach(CLI::App* cmd) {
    cmd->add_option("--algebra", algebra_path, "algebra file");
    cmd->add_option("--catalog", catalog_name, "catalog entry, e.g. sl:2 or heisenberg:1");
    cmd->add_option("--field", field_name, "field for catalog entries: Q or F<p>");
  }

  Field field() const {
    auto f = Field::parse(field_name.empty() ? "F5" : field_name);
    if (!f) throw FormatError("bad field '" + field_name + "'");
    return *f;
  }

  LieAlgebra load(Report& rep) const {
    if (!algebra_path.empty()) {
      rep.input("algebra", algebra_path);
      return parse_algebra(read_file(algebra_path));
    }
    if (!catalog_name.empty()) {
      rep.input("catalog", catalog_name);
      return catalog_spec(catalog_name, field());
    }
    throw FormatError("one of --algebra or --catalog is required");
  }
};

void report_group(Report& rep, const FiniteGroupTable& t, const std::string& prefix) {
  GroupAnalysis an = group_analysis(t);
  rep.kv(prefix + "order", an.order);
  rep.flag(prefix + "abelian", an.abelian);
  rep.flag(prefix + "cyclic", an.cyclic);
  rep.flag(prefix + "elementary_abelian", an.elementary_abelian);
  rep.flag(prefix + "metabelian", an.metabelian);
  rep.flag(prefix + "solvable", an.solvable);
  std::string series;
  for (std::size_t i = 0; i < an.derived_series_orders.size(); ++i)
    series += (i ? " " : "") + std::to_string(an.derived_series_orders[i]);
  rep.kv(prefix + "derived_series_orders", series);
}

std::size_t find_generator(const FiniteGroupTable& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    if (t.element_order(i) == t.n) return i;
  throw std::invalid_argument("the group is not cyclic");
}

GroupAction load_action(Report& rep, const AlgebraInput& in, const std::string& gen_path) {
  LieAlgebra h = in.load(rep);
  if (gen_path.empty()) throw FormatError("--generators is required");
  rep.input("generators", gen_path);
  std::vector<Matrix> gens = parse_matrices(h.field(), h.dim(), read_file(gen_path));
  return close_group(h, gens);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"exact Lie algebra extensions, group actions and Galois groups"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  AlgebraInput in;
  std::string sub_spec, system_path, gen_path, kind_name = "unified";
  std::string lambda_csv, delta_path, enumerator = "both";
  std::vector<std::string> chain_specs;
  std::size_t gamma_idx = SIZE_MAX;
  std::uint64_t budget = 1ull << 24;
  bool serial = false, show_elements = false;

  auto add_common = [&](CLI::App* c) {
    in.attach(c);
    c->add_flag("--json", json_mode, "machine-readable output");
    return c;
  };

  auto* c_check = add_common(app.add_subcommand("check", "validate an algebra and report predicates"));
  auto* c_sub = add_common(app.add_subcommand("subspaces", "derived subalgebra, center, centralizer"));
  std::string centralizer_spec;
  c_sub->add_option("--centralizer", centralizer_spec, "subspace spec to centralize");
  auto* c_der = add_common(app.add_subcommand("derivations", "derivation algebra"));
  auto* c_prod = add_common(app.add_subcommand("product", "build a product from a system file"));
  c_prod->add_option("--system", system_path, "extending system file")->required();
  c_prod->add_option("--kind", kind_name, "unified | skew | semidirect");
  auto* c_canon = add_common(app.add_subcommand("canonical", "canonical extending system of a subalgebra"));
  c_canon->add_option("--sub", sub_spec, "subalgebra spec")->required();
  auto* c_gal = add_common(app.add_subcommand("galois", "compute Gal(h/g) with both enumerators"));
  c_gal->add_option("--sub", sub_spec, "subalgebra spec (defaults to the catalog extension)");
  c_gal->add_option("--budget", budget, "candidate budget");
  c_gal->add_option("--enumerator", enumerator, "both | direct | structured");
  c_gal->add_flag("--serial", serial, "disable the parallel scan");
  c_gal->add_flag("--elements", show_elements, "print the (sigma, r) pairs");
  auto* c_act = add_common(app.add_subcommand("action", "group closure, invariants, Reynolds operator"));
  c_act->add_option("--generators", gen_path, "generator matrices file");
  auto* c_h90 = add_common(app.add_subcommand("hilbert90", "Ker(t) = Im(id - gamma) for a cyclic action"));
  c_h90->add_option("--generators", gen_path, "generator matrices file");
  c_h90->add_option("--gamma", gamma_idx, "index of the generator (default: autodetect)");
  auto* c_artin = add_common(app.add_subcommand("artin", "reconstruct h as a skew crossed product over h^G"));
  c_artin->add_option("--generators", gen_path, "generator matrices file");
  auto* c_cyc = add_common(app.add_subcommand("cyclic-structure", "semidirect structure of a gamma-abelian action"));
  c_cyc->add_option("--generators", gen_path, "generator matrices file");
  c_cyc->add_option("--gamma", gamma_idx, "index of the generator (default: autodetect)");
  auto* c_cod = add_common(app.add_subcommand("codim1", "the group of a twisted derivation pair"));
  c_cod->add_option("--lambda", lambda_csv, "functional values on the basis")->required();
  c_cod->add_option("--delta", delta_path, "matrix file")->required();
  c_cod->add_option("--budget", budget, "candidate budget");
  auto* c_rad = add_common(app.add_subcommand("radical", "verify a radical chain and solvability"));
  c_rad->add_option("--chain", chain_specs, "subspace specs from g upward (the full algebra is appended)")
      ->required();
  c_rad->add_option("--budget", budget, "candidate budget");
  auto* c_cat = app.add_subcommand("catalog", "emit a named algebra");
  std::string cat_name;
  c_cat->add_option("--name", cat_name, "catalog entry, e.g. gl:3")->required();
  c_cat->add_option("--field", in.field_name, "field: Q or F<p>");
  c_cat->add_flag("--json", json_mode, "machine-readable output");

  CLI11_PARSE(app, argc, argv);
  CLI::App* cmd = app.get_subcommands().front();
  Report rep(cmd->get_name(), json_mode);
  Timer timer;

  if (cmd == c_check) {
    LieAlgebra l = in.load(rep);
    rep.kv("field", l.field().to_string());
    rep.kv("dim", l.dim());
    rep.verdict("lie_algebra", true);
    StructuralReport sr = structural_predicates(l);
    rep.flag("perfect", sr.perfect);
    rep.flag("abelian", sr.abelian);
    rep.flag("solvable", sr.solvable);
    rep.flag("nilpotent_center_free", sr.nilpotent_center_free);
    rep.flag("all_derivations_inner", sr.all_derivations_inner);
    rep.flag("complete", sr.complete);
    rep.flag("sympathetic", sr.sympathetic);
    std::string series;
    for (std::size_t i = 0; i < sr.derived_series_dims.size(); ++i)
      series += (i ? " " : "") + std::to_string(sr.derived_series_dims[i]);
    rep.kv("derived_series_dims", series);
  } else if (cmd == c_sub) {
    LieAlgebra l = in.load(rep);
    rep.kv("field", l.field().to_string());
    Subspace der = derived_subalgebra(l), cen = center(l);
    rep.kv("derived_dim", der.dim());
    rep.kv("derived_basis", subspace_str(der));
    rep.kv("center_dim", cen.dim());
    rep.kv("center_basis", subspace_str(cen));
    if (!centralizer_spec.empty()) {
      Subspace s = parse_subspace_spec(l.field(), l.dim(), centralizer_spec);
      Subspace c = centralizer(l, s);
      rep.kv("centralizer_dim", c.dim());
      rep.kv("centralizer_basis", subspace_str(c));
    }
  } else if (cmd == c_der) {
    LieAlgebra l = in.load(rep);
    rep.kv("field", l.field().to_string());
    Subspace d = derivations(l);
    rep.kv("derivations_dim", d.dim());
    rep.flag("all_inner", structural_predicates(l).all_derivations_inner);
  } else if (cmd == c_prod) {
    LieAlgebra g = in.load(rep);
    rep.input("system", system_path);
    ExtendingSystem sys = parse_system(g.field(), g.dim(), read_file(system_path));
    AxiomReport ax = check_extending_axioms(g, sys);
    rep.verdict("extending_axioms", ax.all_ok());
    if (!ax.all_ok()) {
      rep.kv("first_failure", ax.first_failure());
      return rep.finish();
    }
    rep.kv("kind", to_string(classify(sys)));
    LieAlgebra prod = kind_name == "skew"        ? skew_crossed_product(g, sys)
                      : kind_name == "semidirect" ? semidirect_product(g, sys)
                                                  : unified_product(g, sys);
    std::string out = serialize_algebra(prod);
    rep.doc["product"] = out;
    rep.text << out;
  } else if (cmd == c_canon) {
    LieAlgebra h = in.load(rep);
    Subspace g = parse_subspace_spec(h.field(), h.dim(), sub_spec);
    Extension ext = make_extension(h, g);
    ExtendingSystem sys = canonical_extending_system(ext);
    rep.kv("kind", to_string(classify(sys)));
    rep.verdict("phi_isomorphism", phi_iso_check(ext));
    std::string out = serialize_system(sys);
    rep.doc["system"] = out;
    rep.text << out;
  } else if (cmd == c_gal) {
    Extension ext = [&] {
      if (!in.catalog_name.empty() && in.algebra_path.empty()) {
        rep.input("catalog", in.catalog_name);
        ExtensionSpec es = extension_catalog(in.catalog_name, in.field());
        Subspace g = sub_spec.empty() ? es.sub
                                      : parse_subspace_spec(es.h.field(), es.h.dim(), sub_spec);
        return make_extension(es.h, g);
      }
      LieAlgebra h = in.load(rep);
      if (sub_spec.empty()) throw FormatError("--sub is required with --algebra");
      return make_extension(h, parse_subspace_spec(h.field(), h.dim(), sub_spec));
    }();
    rep.kv("field", ext.h.field().to_string());
    rep.doc["budgets"]["candidates"] = budget;
    std::optional<GaloisGroup> direct, structured;
    if (enumerator == "both" || enumerator == "direct") {
      Timer t;
      direct = galois_group_direct(ext, budget, !serial);
      rep.doc["timings"]["direct_ms"] = t.ms();
      rep.kv("direct_candidates_scanned", direct->candidates_scanned);
    }
    if (enumerator == "both" || enumerator == "structured") {
      Timer t;
      structured = galois_group_structured(ext, budget);
      rep.doc["timings"]["structured_ms"] = t.ms();
      rep.kv("structured_candidates_scanned", structured->candidates_scanned);
    }
    const GaloisGroup& grp = direct ? *direct : *structured;
    rep.doc["group_order"] = grp.order();
    report_group(rep, grp.table, "");
    if (direct && structured) {
      bool same = direct->order() == structured->order();
      for (std::size_t i = 0; same && i < direct->order(); ++i)
        same = direct->elements[i].sigma == structured->elements[i].sigma &&
               direct->elements[i].r == structured->elements[i].r;
      rep.verdict("enumerators_agree", same);
    }
    if (show_elements)
      for (std::size_t i = 0; i < grp.order(); ++i) {
        std::string s;
        for (std::size_t r = 0; r < grp.elements[i].sigma.rows(); ++r)
          s += (r ? ";" : "") + vec_str(grp.elements[i].sigma.row(r));
        s += " | ";
        for (std::size_t r = 0; r < grp.elements[i].r.rows(); ++r)
          s += (r ? ";" : "") + vec_str(grp.elements[i].r.row(r));
        rep.kv("element_" + std::to_string(i), s);
      }
  } else if (cmd == c_act) {
    GroupAction act = load_action(rep, in, gen_path);
    rep.kv("field", act.h.field().to_string());
    report_group(rep, act.table, "group_");
    Subspace inv = invariants(act);
    rep.kv("invariants_dim", inv.dim());
    rep.kv("invariants_basis", subspace_str(inv));
    try {
      ReynoldsData rd = reynolds(act);
      rep.verdict("reynolds_idempotent", rd.t * rd.t == rd.t);
      rep.verdict("reynolds_image_is_invariants", rd.inv == inv);
    } catch (const ModularCaseError&) {
      rep.flag("modular_case", true);
    }
  } else if (cmd == c_h90) {
    GroupAction act = load_action(rep, in, gen_path);
    std::size_t g = gamma_idx == SIZE_MAX ? find_generator(act.table) : gamma_idx;
    rep.kv("gamma", g);
    rep.verdict("hilbert90", hilbert90_check(act, g));
  } else if (cmd == c_artin) {
    GroupAction act = load_action(rep, in, gen_path);
    ArtinResult res = artin_reconstruct(act);
    rep.kv("kind", to_string(res.kind));
    rep.verdict("skew_axioms", res.skew.all_ok());
    rep.verdict("theta_matches", res.theta_matches);
    rep.verdict("phi_isomorphism", res.phi_ok);
  } else if (cmd == c_cyc) {
    GroupAction act = load_action(rep, in, gen_path);
    std::size_t g = gamma_idx == SIZE_MAX ? find_generator(act.table) : gamma_idx;
    rep.kv("gamma", g);
    CyclicStructureResult cs = cyclic_structure(act, g);
    rep.verdict("cyclic", cs.cyclic);
    rep.verdict("hilbert90", cs.hilbert90);
    rep.verdict("gamma_abelian", cs.gamma_abelian);
    rep.flag("theta_trivial", cs.theta_trivial);
    rep.flag("ideal", cs.ideal);
    rep.verdict("semidirect_isomorphism", cs.semidirect_iso);
  } else if (cmd == c_cod) {
    LieAlgebra g = in.load(rep);
    TwistedDerivation td{parse_vector(g.field(), lambda_csv),
                         parse_matrix(g.field(), read_file(delta_path))};
    if (td.lambda.size() != g.dim() || td.delta.rows() != g.dim() || td.delta.cols() != g.dim())
      throw FormatError("lambda/delta dimensions do not match the algebra");
    rep.verdict("twisted_derivation", twisted_derivation_check(g, td));
    if (!rep.all_ok) return rep.finish();
    rep.doc["budgets"]["candidates"] = budget;
    Codim1Group grp = codim1_group(g, td, budget);
    rep.doc["group_order"] = grp.elements.size();
    report_group(rep, grp.table, "");
    rep.verdict("metabelian", group_analysis(grp.table).metabelian);
  } else if (cmd == c_rad) {
    LieAlgebra h = in.load(rep);
    std::vector<Subspace> chain;
    for (const std::string& s : chain_specs)
      chain.push_back(parse_subspace_spec(h.field(), h.dim(), s));
    if (chain.empty() || chain.back().dim() != h.dim())
      chain.push_back(Subspace::full(h.field(), h.dim()));
    rep.doc["budgets"]["candidates"] = budget;
    RadicalChainReport rr = verify_radical_chain(h, chain, budget);
    rep.verdict("chain_valid", rr.chain_valid);
    if (!rr.chain_valid) {
      rep.kv("invalid_reason", rr.invalid_reason);
      return rep.finish();
    }
    for (std::size_t i = 0; i < rr.steps.size(); ++i) {
      rep.kv("step_" + std::to_string(i) + "_galois_order", rr.steps[i].galois_order);
      rep.verdict("step_" + std::to_string(i) + "_metabelian", rr.steps[i].metabelian);
      rep.flag("step_" + std::to_string(i) + "_stable", rr.steps[i].stable);
    }
    rep.doc["group_order"] = rr.galois_order;
    rep.kv("galois_order", rr.galois_order);
    rep.verdict("solvable", rr.solvable);
  } else if (cmd == c_cat) {
    LieAlgebra l = catalog_spec(cat_name, in.field());
    std::string out = serialize_algebra(l);
    rep.doc["algebra"] = out;
    rep.text << out;
  }

  rep.doc["timings"]["total_ms"] = timer.ms();
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ModularCaseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModular;
  } catch (const InfiniteFieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfinite;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
