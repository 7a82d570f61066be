#include "taugp/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace taugp {

std::string scalar_text(const mpq_class& x) {
  mpq_class c(x);
  c.canonicalize();
  return c.get_str();
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_text(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rep_to_json(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  Json j;
  j["algebra"] = cache_key(*a, "algebra");
  j["field"] = a->field().describe();
  j["dims"] = m.dims();
  Json arrows = Json::array();
  for (size_t i = 0; i < a->quiver().arrows.size(); ++i) {
    Json ja;
    ja["label"] = a->quiver().arrows[i].label;
    ja["matrix"] = matrix_to_json(m.arrow_map(static_cast<int>(i)));
    arrows.push_back(std::move(ja));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Representation rep_from_json(const AlgebraPtr& a, const Json& j) {
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  if (static_cast<int>(dims.size()) != a->num_vertices())
    throw std::invalid_argument("module has the wrong number of vertex dimensions");
  std::vector<Matrix> maps;
  for (size_t i = 0; i < a->quiver().arrows.size(); ++i) {
    const auto& ar = a->quiver().arrows[i];
    const Json* found = nullptr;
    for (const auto& ja : j.at("arrows"))
      if (ja.at("label").get<std::string>() == ar.label) found = &ja;
    if (!found) throw std::invalid_argument("module is missing arrow " + ar.label);
    const Json& rows = found->at("matrix");
    Matrix m(a->field(), dims[ar.target], dims[ar.source]);
    if (static_cast<int>(rows.size()) != m.rows())
      throw std::invalid_argument("bad matrix shape for arrow " + ar.label);
    for (int r = 0; r < m.rows(); ++r) {
      const Json& row = rows[r];
      if (static_cast<int>(row.size()) != m.cols())
        throw std::invalid_argument("bad matrix shape for arrow " + ar.label);
      for (int c = 0; c < m.cols(); ++c)
        m.set(r, c, mpq_class(row[c].get<std::string>()));
    }
    maps.push_back(std::move(m));
  }
  return Representation(a, std::move(dims), std::move(maps));
}

namespace {

const char* status_text(GpVerdict::Status s) {
  switch (s) {
    case GpVerdict::Status::CertifiedGP:
      return "certified-gp";
    case GpVerdict::Status::CertifiedNotGP:
      return "certified-not-gp";
    default:
      return "vanishes-up-to-bound";
  }
}

const char* certificate_text(GpVerdict::Certificate c) {
  switch (c) {
    case GpVerdict::Certificate::Projective:
      return "projective";
    case GpVerdict::Certificate::GorensteinDimension:
      return "gorenstein-dimension";
    case GpVerdict::Certificate::SyzygyPeriodicity:
      return "syzygy-periodicity";
    case GpVerdict::Certificate::NonzeroExtWitness:
      return "nonzero-ext-witness";
    case GpVerdict::Certificate::ReflexivityFailure:
      return "reflexivity-failure";
    default:
      return "none";
  }
}

}  // namespace

Json verdict_to_json(const GpVerdict& v) {
  Json j;
  j["status"] = status_text(v.status);
  j["certificate"] = certificate_text(v.certificate);
  j["bound"] = v.bound_used;
  switch (v.certificate) {
    case GpVerdict::Certificate::GorensteinDimension:
      j["gorenstein_d"] = v.gorenstein_d;
      break;
    case GpVerdict::Certificate::SyzygyPeriodicity:
      j["period"] = Json::array({v.period_from, v.period_to});
      break;
    case GpVerdict::Certificate::NonzeroExtWitness:
      j["witness_degree"] = v.witness_degree;
      j["witness_side"] = v.witness_side;
      break;
    default:
      break;
  }
  j["text"] = v.describe();
  return j;
}

Json cm_verdict_to_json(const CmTauVerdict& v) {
  Json j;
  switch (v.status) {
    case CmTauVerdict::Status::Finite:
      j["status"] = "finite";
      break;
    case CmTauVerdict::Status::Infinite:
      j["status"] = "infinite";
      break;
    default:
      j["status"] = "undecided";
      break;
  }
  switch (v.route) {
    case CmTauVerdict::Route::TauTiltingFiniteEnumeration:
      j["route"] = "tau-tilting-finite-enumeration";
      break;
    case CmTauVerdict::Route::FiniteGlobalDimension:
      j["route"] = "finite-global-dimension";
      break;
    case CmTauVerdict::Route::RadicalSquareZeroDichotomy:
      j["route"] = "radical-square-zero-dichotomy";
      break;
    default:
      j["route"] = "none";
      break;
  }
  j["witness"] = v.witness;
  return j;
}

std::string module_label(const Representation& m) {
  if (m.total_dim() == 0) return "0";
  const AlgebraPtr& a = m.algebra();
  const Field f = m.field();
  std::vector<std::string> layers;
  Representation cur = m;
  while (cur.total_dim() > 0) {
    // span of the radical action: columns of every radical basis action
    std::vector<Matrix> span;
    for (int v = 0; v < a->num_vertices(); ++v) span.push_back(Matrix(f, cur.dim(v), 0));
    for (int b : a->radical_basis()) {
      int t = a->basis()[b].target;
      span[t] = span[t].hstack(cur.basis_action(b));
    }
    std::vector<std::string> factors;
    for (int v = 0; v < a->num_vertices(); ++v) {
      span[v] = span[v].column_space_basis();
      for (int k = cur.dim(v) - span[v].cols(); k > 0; --k)
        factors.push_back(a->quiver().vertices[v]);
    }
    std::ostringstream os;
    if (factors.size() > 1) os << "(";
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i];
    if (factors.size() > 1) os << ")";
    layers.push_back(os.str());
    cur = cur.sub_representation(span);
  }
  std::ostringstream os;
  for (size_t i = 0; i < layers.size(); ++i) os << (i ? "/" : "") << layers[i];
  return os.str();
}

std::string pair_label(const RigidPair& rp) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& part : rp.m_parts) {
    if (!first) os << "|";
    os << module_label(part);
    first = false;
  }
  for (size_t i = 0; i < rp.p_vertices.size(); ++i) {
    if (!first) os << "|";
    os << " ";
    first = false;
  }
  os << "]";
  return os.str();
}

Json graph_to_json(const ExchangeGraph& g, int bound) {
  Json j;
  j["algebra"] = cache_key(*g.algebra, "algebra");
  j["complete"] = g.complete;
  Json nodes = Json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const RigidPair& rp = g.nodes[i].rp;
    Json jn;
    jn["index"] = i;
    jn["label"] = pair_label(rp);
    Json summands = Json::array();
    for (size_t k = 0; k < rp.m_parts.size(); ++k) {
      Json js;
      js["label"] = module_label(rp.m_parts[k]);
      js["dims"] = rp.m_parts[k].dims();
      js["projective_vertex"] = rp.part_projective_vertex[k];
      summands.push_back(std::move(js));
    }
    jn["summands"] = std::move(summands);
    Json support = Json::array();
    for (int v : rp.p_vertices) support.push_back(g.algebra->quiver().vertices[v]);
    jn["support"] = std::move(support);
    jn["gp"] = g.complete ? verdict_to_json(gp_status(rp, bound)) : Json(nullptr);
    nodes.push_back(std::move(jn));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["position"] = e.position;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_dot(const ExchangeGraph& g, int bound) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << pair_label(g.nodes[i].rp) << "\"";
    if (g.complete && gp_status(g.nodes[i].rp, bound).certified_gp())
      os << ", peripheries=2, style=bold";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << ";\n";
  if (!g.complete) os << "  incomplete [shape=plaintext, label=\"(truncated)\"];\n";
  os << "}\n";
  return os.str();
}

Json torsion_to_json(const TorsionPairDescriptor& d, int bound) {
  TorsionClassification c = classify_torsion_pair(d, bound);
  Json j;
  j["generator"] = pair_label(d.pair.rp);
  j["cogenerator"] = module_label(d.cogenerator);
  j["gorenstein"] = c.gorenstein == Decision::Yes
                        ? Json(true)
                        : (c.gorenstein == Decision::No ? Json(false) : Json(nullptr));
  j["trivial"] = c.trivial;
  j["cogenerator_gi"] = verdict_to_json(gi_verdict(d.cogenerator, bound));
  j["dual_side_agrees"] = dual_side_check(d, bound);
  return j;
}

std::string cache_key(const BoundQuiverAlgebra& a, const std::string& tag) {
  // FNV-1a, stable across platforms
  std::string content = a.content_key() + "#" + tag;
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<Json> cache_load(const std::string& dir, const std::string& key) {
  std::ifstream in(std::filesystem::path(dir) / (key + ".json"));
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
  return j;
}

void cache_store(const std::string& dir, const std::string& key, const Json& payload) {
  std::filesystem::create_directories(dir);
  auto path = std::filesystem::path(dir) / (key + ".json");
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << payload.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace taugp
