#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "taugp/serialize.hpp"

using namespace taugp;

namespace {

struct RunConfig {
  std::string field;  // empty: keep the file's field
  int ext_bound = 12;
  int budget = 10000;
  std::string emit = "text";
  std::string cache;
};

Field parse_field_flag(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("Fp:", 0) == 0) return Field::prime(std::stol(s.substr(3)));
  throw CLI::ValidationError("--field", "expected Q or Fp:<p>");
}

AlgebraPtr load_algebra(const std::string& file, const RunConfig& cfg) {
  auto parsed = parse_algebra_file(file);
  Field f = cfg.field.empty() ? parsed.field : parse_field_flag(cfg.field);
  return make_algebra(BoundQuiverAlgebra::build(parsed.quiver, parsed.relations, f));
}

// Reports are cached whole, keyed by algebra content plus the command
// parameters; a hit prints instantly and keeps the recorded exit code.
int emit_report(const RunConfig& cfg, const AlgebraPtr& a, const std::string& tag,
                const std::function<std::pair<Json, int>()>& compute) {
  std::string key = cache_key(*a, tag + "|emit=" + cfg.emit);
  if (!cfg.cache.empty()) {
    if (auto hit = cache_load(cfg.cache, key)) {
      if (hit->contains("payload") && hit->contains("exit_status")) {
        if (cfg.emit == "json")
          std::cout << (*hit)["payload"].dump(2) << "\n";
        else
          std::cout << (*hit)["payload"].get<std::string>();
        return (*hit)["exit_status"].get<int>();
      }
    }
  }
  auto [payload, status] = compute();
  if (!cfg.cache.empty()) {
    Json wrap;
    wrap["payload"] = payload;
    wrap["exit_status"] = status;
    cache_store(cfg.cache, key, wrap);
  }
  if (cfg.emit == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << payload.get<std::string>();
  return status;
}

int cmd_check(const RunConfig& cfg, const std::string& file) {
  AlgebraPtr a = load_algebra(file, cfg);
  auto idr = injective_dimension_probe(a, Side::Right, cfg.ext_bound);
  auto idl = injective_dimension_probe(a, Side::Left, cfg.ext_bound);
  auto gd = global_dimension_probe(a, cfg.ext_bound);
  auto si = is_self_injective(a);
  auto fmt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string(">= bound");
  };
  if (cfg.emit == "json") {
    Json j;
    j["file"] = file;
    j["field"] = a->field().describe();
    j["dimension"] = a->dimension();
    j["vertices"] = a->num_vertices();
    j["radical_square_zero"] = a->radical_square_zero();
    j["self_injective"] = si.self_injective;
    j["injective_dimension_right"] = idr ? Json(*idr) : Json(nullptr);
    j["injective_dimension_left"] = idl ? Json(*idl) : Json(nullptr);
    j["global_dimension"] = gd ? Json(*gd) : Json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << file << ": dim " << a->dimension() << ", " << a->field().describe()
            << ", " << a->num_vertices() << " vertices\n";
  std::cout << "  radical square zero: " << (a->radical_square_zero() ? "yes" : "no")
            << "\n";
  std::cout << "  self-injective: " << (si.self_injective ? "yes" : "no") << "\n";
  std::cout << "  injective dimension (right/left): " << fmt(idr) << " / " << fmt(idl)
            << "\n";
  std::cout << "  global dimension: " << fmt(gd) << "\n";
  if (idr && idl && *idr == *idl)
    std::cout << "  " << *idr << "-Gorenstein\n";
  return 0;
}

int cmd_enumerate(const RunConfig& cfg, const std::string& file) {
  AlgebraPtr a = load_algebra(file, cfg);
  return emit_report(cfg, a, "enumerate|budget=" + std::to_string(cfg.budget), [&] {
    ExchangeGraph g = enumerate_exchange_graph(a, cfg.budget);
    int status = g.complete ? 0 : 1;
    if (cfg.emit == "json") return std::pair<Json, int>(graph_to_json(g, cfg.ext_bound), status);
    if (cfg.emit == "dot") return std::pair<Json, int>(Json(graph_to_dot(g, cfg.ext_bound)), status);
    std::ostringstream os;
    os << file << ": " << g.nodes.size() << " nodes, " << g.edges.size() << " edges, "
       << (g.complete ? "complete" : "incomplete (budget exhausted)") << "\n";
    for (size_t i = 0; i < g.nodes.size(); ++i)
      os << "  " << i << ": " << pair_label(g.nodes[i].rp) << "\n";
    return std::pair<Json, int>(Json(os.str()), status);
  });
}

int cmd_gp_report(const RunConfig& cfg, const std::string& file) {
  AlgebraPtr a = load_algebra(file, cfg);
  return emit_report(cfg, a, "gp-report|budget=" + std::to_string(cfg.budget) +
                                 "|bound=" + std::to_string(cfg.ext_bound), [&] {
    ExchangeGraph g = enumerate_exchange_graph(a, cfg.budget);
    if (!g.complete) {
      std::cerr << "enumeration incomplete; raise --budget\n";
      return std::pair<Json, int>(Json(std::string("enumeration incomplete\n")), 2);
    }
    auto filt = gp_filter(g, cfg.ext_bound);
    auto indec = indecomposable_gp_tau_rigid(g, cfg.ext_bound);
    bool all_dual_ok = true;
    Json torsion = Json::array();
    for (const auto& node : g.nodes) {
      Json t = torsion_to_json(torsion_pair_of(node), cfg.ext_bound);
      if (!t["dual_side_agrees"].get<bool>()) all_dual_ok = false;
      torsion.push_back(std::move(t));
    }
    int status = all_dual_ok && filt.undecided.empty() ? 0 : 1;
    if (cfg.emit == "json") {
      Json j;
      j["graph"] = graph_to_json(g, cfg.ext_bound);
      j["gp_tau_tilting"] = filt.gp_tau_tilting;
      j["gp_proper_support"] = filt.gp_proper_support;
      j["undecided"] = filt.undecided;
      Json ji = Json::array();
      for (const auto& m : indec) ji.push_back(module_label(m));
      j["indecomposable_gp_tau_rigid"] = std::move(ji);
      j["torsion"] = std::move(torsion);
      return std::pair<Json, int>(std::move(j), status);
    }
    std::ostringstream os;
    os << file << ": " << g.nodes.size() << " pairs enumerated\n";
    os << "gp tau-tilting pairs (" << filt.gp_tau_tilting.size() << "):\n";
    for (int i : filt.gp_tau_tilting) os << "  " << pair_label(g.nodes[i].rp) << "\n";
    os << "gp proper support pairs (" << filt.gp_proper_support.size() << "):\n";
    for (int i : filt.gp_proper_support) os << "  " << pair_label(g.nodes[i].rp) << "\n";
    if (!filt.undecided.empty()) {
      os << "undecided (" << filt.undecided.size() << "):\n";
      for (int i : filt.undecided) os << "  " << pair_label(g.nodes[i].rp) << "\n";
    }
    os << "indecomposable gp tau-rigid modules (" << indec.size() << "):";
    for (const auto& m : indec) os << " " << module_label(m);
    os << "\n";
    os << "torsion pairs: gorenstein "
       << std::count_if(torsion.begin(), torsion.end(),
                        [](const Json& t) { return t["gorenstein"] == Json(true); })
       << ", trivial "
       << std::count_if(torsion.begin(), torsion.end(),
                        [](const Json& t) { return t["trivial"].get<bool>(); })
       << " of " << torsion.size() << "; dual-side agreement "
       << (all_dual_ok ? "ok" : "FAILED") << "\n";
    return std::pair<Json, int>(Json(os.str()), status);
  });
}

int cmd_dagger(const RunConfig& cfg, const std::string& file) {
  AlgebraPtr a = load_algebra(file, cfg);
  return emit_report(cfg, a, "dagger|budget=" + std::to_string(cfg.budget) +
                                 "|bound=" + std::to_string(cfg.ext_bound), [&] {
    ExchangeGraph g = enumerate_exchange_graph(a, cfg.budget);
    ExchangeGraph gop = enumerate_exchange_graph(opposite_of(a), cfg.budget);
    if (!g.complete || !gop.complete) {
      std::cerr << "enumeration incomplete; raise --budget\n";
      return std::pair<Json, int>(Json(std::string("enumeration incomplete\n")), 2);
    }
    bool ok = g.nodes.size() == gop.nodes.size();
    Json matches = Json::array();
    for (size_t i = 0; i < g.nodes.size() && ok; ++i) {
      RigidPair img = dagger(g.nodes[i].rp);
      int match = -1;
      for (size_t j = 0; j < gop.nodes.size(); ++j)
        if (pairs_isomorphic(gop.nodes[j].rp, img)) match = static_cast<int>(j);
      bool invol = pairs_isomorphic(dagger(img), g.nodes[i].rp);
      bool gp_eq = gp_status(g.nodes[i].rp, cfg.ext_bound).certified_gp() ==
                   gp_status(img, cfg.ext_bound).certified_gp();
      if (match < 0 || !invol || !gp_eq) ok = false;
      Json m;
      m["node"] = i;
      m["label"] = pair_label(g.nodes[i].rp);
      m["opposite_node"] = match;
      m["opposite_label"] = pair_label(img);
      m["involution"] = invol;
      m["gp_status_equal"] = gp_eq;
      matches.push_back(std::move(m));
    }
    int status = ok ? 0 : 1;
    if (cfg.emit == "json") {
      Json j;
      j["nodes"] = g.nodes.size();
      j["opposite_nodes"] = gop.nodes.size();
      j["matched"] = ok;
      j["matches"] = std::move(matches);
      return std::pair<Json, int>(std::move(j), status);
    }
    std::ostringstream os;
    os << file << ": " << g.nodes.size() << " <-> " << gop.nodes.size() << " pairs, "
       << (ok ? "bijection verified" : "MISMATCH") << "\n";
    for (const auto& m : matches)
      os << "  " << m["label"].get<std::string>() << "  =>  "
         << m["opposite_label"].get<std::string>() << "\n";
    return std::pair<Json, int>(Json(os.str()), status);
  });
}

Representation parse_module_spec(const AlgebraPtr& a, const std::string& spec) {
  if (spec == "regular" || spec == "Lambda") return Representation::regular(a);
  if (spec == "zero" || spec == "0") return Representation::zero(a);
  if ((spec[0] == 'S' || spec[0] == 'P') && spec.size() > 1) {
    std::string label = spec.substr(spec[1] == ':' ? 2 : 1);
    int v = a->quiver().vertex_index(label);
    return spec[0] == 'S' ? Representation::simple(a, v) : Representation::projective(a, v);
  }
  // otherwise: a JSON file produced by the serializer
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot read module spec " + spec);
  Json j;
  in >> j;
  return rep_from_json(a, j);
}

int cmd_bongartz(const RunConfig& cfg, const std::string& file, const std::string& spec) {
  AlgebraPtr a = load_algebra(file, cfg);
  Representation m = parse_module_spec(a, spec);
  if (!is_tau_rigid(m)) {
    std::cerr << "module " << module_label(m) << " is not tau-rigid\n";
    return 2;
  }
  ExchangeGraph g = enumerate_exchange_graph(a, cfg.budget);
  if (!g.complete) {
    std::cerr << "enumeration incomplete; raise --budget\n";
    return 2;
  }
  auto b = bongartz_completion(m, g);
  GpVerdict v = gp_status(b.rp, cfg.ext_bound);
  if (cfg.emit == "json") {
    Json j;
    j["module"] = module_label(m);
    j["module_gp"] = verdict_to_json(gp_verdict(m, cfg.ext_bound));
    j["completion"] = pair_label(b.rp);
    Json summands = Json::array();
    for (const auto& part : b.rp.m_parts) summands.push_back(module_label(part));
    j["summands"] = std::move(summands);
    j["gp"] = verdict_to_json(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "module: " << module_label(m) << "\n";
    std::cout << "completion: " << pair_label(b.rp) << "\n";
    std::cout << "gp verdict: " << v.describe() << "\n";
  }
  return 0;
}

int cmd_cm_finite(const RunConfig& cfg, const std::string& file) {
  AlgebraPtr a = load_algebra(file, cfg);
  CmTauVerdict v = cm_tau_finiteness(a, cfg.budget);
  if (cfg.emit == "json")
    std::cout << cm_verdict_to_json(v).dump(2) << "\n";
  else {
    Json j = cm_verdict_to_json(v);
    std::cout << file << ": " << j["status"].get<std::string>() << " (route "
              << j["route"].get<std::string>() << "; " << v.witness << ")\n";
  }
  return v.status == CmTauVerdict::Status::Undecided ? 1 : 0;
}

int cmd_paper_examples(const RunConfig& cfg) {
  std::string dir = TAUGP_DATA_DIR;
  int failures = 0;
  auto claim = [&](const std::string& name, const std::string& text, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": " << text << "\n";
    if (!ok) ++failures;
  };
  auto load = [&](const std::string& name) { return load_algebra(dir + "/" + name, cfg); };
  int bound = cfg.ext_bound;

  {
    auto a = load("3d.alg");
    auto idr = injective_dimension_probe(a, Side::Right, bound);
    auto idl = injective_dimension_probe(a, Side::Left, bound);
    claim("two-relation-triangle", "1-Gorenstein", idr == 1 && idl == 1);
    auto g = enumerate_exchange_graph(a, cfg.budget);
    auto filt = gp_filter(g, bound);
    claim("two-relation-triangle", "gp support tau-tilting chain of length 4",
          filt.gp_tau_tilting.size() + filt.gp_proper_support.size() >= 4 &&
              filt.undecided.empty());
  }
  {
    auto a = load("3e.alg");
    claim("3-cycle", "self-injective", is_self_injective(a).self_injective);
    auto g = enumerate_exchange_graph(a, cfg.budget);
    auto filt = gp_filter(g, bound);
    claim("3-cycle", "every pair is gp",
          filt.gp_tau_tilting.size() + filt.gp_proper_support.size() == g.nodes.size());
    auto cm = cm_tau_finiteness(a, 5);
    claim("3-cycle", "radical-square-zero dichotomy decides finiteness",
          cm.status == CmTauVerdict::Status::Finite &&
              cm.route == CmTauVerdict::Route::RadicalSquareZeroDichotomy);
  }
  {
    auto a = load("36.alg");
    auto g = enumerate_exchange_graph(a, cfg.budget);
    claim("double-arrow", "24 pairs, 36 exchanges",
          g.complete && g.nodes.size() == 24 && g.edges.size() == 36);
    auto filt = gp_filter(g, bound);
    int projective_free = 0;
    for (int i : filt.gp_tau_tilting) {
      bool pf = true;
      for (int pv : g.nodes[i].rp.part_projective_vertex)
        if (pv >= 0) pf = false;
      if (pf) ++projective_free;
    }
    claim("double-arrow", "exactly 2 projective-free gp tau-tilting pairs",
          projective_free == 2);
  }
  {
    auto a = load("61.alg");
    auto s1 = Representation::simple(a, 0);
    claim("pinched-square", "the simple at the source is gp tau-rigid",
          gp_verdict(s1, bound).certified_gp() && is_tau_rigid(s1));
    auto g = enumerate_exchange_graph(a, cfg.budget);
    auto b = bongartz_completion(s1, g);
    claim("pinched-square", "its bongartz completion is certified not gp",
          gp_status(b.rp, bound).certified_not_gp());
  }
  {
    auto cm = cm_tau_finiteness(load("kronecker.alg"), 10);
    claim("kronecker", "finite via the global dimension probe",
          cm.status == CmTauVerdict::Status::Finite &&
              cm.route == CmTauVerdict::Route::FiniteGlobalDimension);
  }
  std::cout << (failures ? "FAILED " + std::to_string(failures) + " claim(s)\n"
                         : "all claims pass\n");
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tau-tilting and Gorenstein-projective toolkit for bound quiver algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--field", cfg.field, "Coefficient field: Q or Fp:<p> (default: the file's)");
  app.add_option("--ext-bound", cfg.ext_bound, "Ext-vanishing search bound")
      ->default_val(12)
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Enumeration node budget")
      ->default_val(10000)
      ->check(CLI::PositiveNumber);
  app.add_option("--emit", cfg.emit, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--cache", cfg.cache, "Report cache directory");

  std::string file, module_spec;
  auto* c_check = app.add_subcommand("check", "Parse an algebra and print its invariants");
  c_check->add_option("file", file)->required();
  auto* c_enum = app.add_subcommand("enumerate", "Enumerate the exchange graph");
  c_enum->add_option("file", file)->required();
  auto* c_gp = app.add_subcommand("gp-report", "Gorenstein-projective classification report");
  c_gp->add_option("file", file)->required();
  auto* c_dag = app.add_subcommand("dagger", "Verify the bijection with the opposite algebra");
  c_dag->add_option("file", file)->required();
  auto* c_bon = app.add_subcommand("bongartz", "Bongartz completion of a tau-rigid module");
  c_bon->add_option("file", file)->required();
  c_bon->add_option("module", module_spec,
                    "S<v>, P<v>, regular, zero, or a serialized module file")
      ->required();
  auto* c_cm = app.add_subcommand("cm-finite", "Decide CM-tau-tilting finiteness");
  c_cm->add_option("file", file)->required();
  app.add_subcommand("paper-examples", "Run the bundled regression examples");

  CLI11_PARSE(app, argc, argv);
  try {
    auto* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();
    if (name == "check") return cmd_check(cfg, file);
    if (name == "enumerate") return cmd_enumerate(cfg, file);
    if (name == "gp-report") return cmd_gp_report(cfg, file);
    if (name == "dagger") return cmd_dagger(cfg, file);
    if (name == "bongartz") return cmd_bongartz(cfg, file, module_spec);
    if (name == "cm-finite") return cmd_cm_finite(cfg, file);
    if (name == "paper-examples") return cmd_paper_examples(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
