#include "taugp/tautilt.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace taugp {

namespace {

std::string dims_text(const Representation& r) {
  std::ostringstream os;
  os << "(";
  for (int v = 0; v < r.algebra()->num_vertices(); ++v) os << (v ? "," : "") << r.dim(v);
  os << ")";
  return os.str();
}

Representation sum_or_zero(const AlgebraPtr& a, const std::vector<Representation>& parts) {
  if (parts.empty()) return Representation::zero(a);
  return Representation::direct_sum(parts);
}

}  // namespace

Representation RigidPair::m_sum() const { return sum_or_zero(algebra, m_parts); }

bool is_tau_rigid(const Representation& m) {
  if (m.total_dim() == 0) return true;
  return dim_hom(m, tau(m)) == 0;
}

RigidPair check_pair(const Representation& m, std::vector<int> p_vertices) {
  RigidPair rp;
  rp.algebra = m.algebra();
  std::sort(p_vertices.begin(), p_vertices.end());
  if (std::unique(p_vertices.begin(), p_vertices.end()) != p_vertices.end())
    throw std::invalid_argument("non-basic projective part: repeated vertex");
  for (int v : p_vertices)
    if (v < 0 || v >= rp.algebra->num_vertices())
      throw std::invalid_argument("projective part names a vertex that does not exist");
  rp.p_vertices = std::move(p_vertices);
  if (m.total_dim() > 0) {
    auto d = decompose(m);
    for (const auto& part : d.parts) {
      if (part.multiplicity > 1)
        throw std::invalid_argument("non-basic module: repeated summand with dimension vector " +
                                    dims_text(part.rep));
      rp.m_parts.push_back(part.rep);
      rp.part_projective_vertex.push_back(part.projective ? part.projective_vertex : -1);
    }
  }
  // Hom(e_v Lambda, M) = M_v, so the pair condition is a support check.
  rp.pair_condition = true;
  for (int v : rp.p_vertices)
    if (m.dim(v) != 0) rp.pair_condition = false;
  rp.tau_rigid = is_tau_rigid(m);
  return rp;
}

SupportTauTiltingPair check_support_tau_tilting(const Representation& m,
                                               std::vector<int> p_vertices) {
  SupportTauTiltingPair s;
  s.rp = check_pair(m, std::move(p_vertices));
  s.count_complete = s.rp.size() == s.rp.algebra->num_vertices();
  return s;
}

GpVerdict gp_status(const RigidPair& pair, int bound) {
  return gp_verdict(pair.m_sum(), bound);
}

RigidPair dagger(const RigidPair& pair) {
  if (!pair.tau_rigid) throw std::invalid_argument("dagger requires a tau-rigid pair");
  AlgebraPtr op = opposite_of(pair.algebra);
  std::vector<Representation> parts;
  // transposes of the non-projective summands first, then the duals of
  // the support slots; the order gives stable matched positions.
  std::vector<int> dagger_p;
  for (size_t i = 0; i < pair.m_parts.size(); ++i) {
    if (pair.part_projective_vertex[i] >= 0)
      dagger_p.push_back(pair.part_projective_vertex[i]);
    else
      parts.push_back(transpose(pair.m_parts[i]));
  }
  for (int v : pair.p_vertices) parts.push_back(Representation::projective(op, v));
  RigidPair out = check_pair(sum_or_zero(op, parts), dagger_p);
  if (!out.tau_rigid) throw std::logic_error("dagger image failed the tau-rigidity check");
  if (!out.pair_condition) throw std::logic_error("dagger image failed the pair condition");
  return out;
}

bool pairs_isomorphic(const RigidPair& a, const RigidPair& b) {
  if (a.p_vertices != b.p_vertices) return false;
  if (a.m_parts.size() != b.m_parts.size()) return false;
  std::vector<bool> used(b.m_parts.size(), false);
  for (const auto& pa : a.m_parts) {
    bool hit = false;
    for (size_t j = 0; j < b.m_parts.size(); ++j) {
      if (used[j]) continue;
      if (iso_class_key(pa) != iso_class_key(b.m_parts[j])) continue;
      if (is_isomorphic(pa, b.m_parts[j])) {
        used[j] = true;
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

namespace {

// Exchange in the direction of a smaller torsion class: cokernel of the
// universal map into add of the complement, with the new summand read
// off the decomposition and everything re-verified.
MutationOutcome mutate_down(const SupportTauTiltingPair& pair, int position) {
  const RigidPair& rp = pair.rp;
  const AlgebraPtr& a = rp.algebra;
  const Representation& x = rp.m_parts[position];
  std::vector<Representation> u;
  for (size_t i = 0; i < rp.m_parts.size(); ++i)
    if (static_cast<int>(i) != position) u.push_back(rp.m_parts[i]);
  Representation u_sum = sum_or_zero(a, u);
  Representation old_sum = rp.m_sum();

  std::vector<Representation> new_class;
  if (!u.empty()) {
    std::vector<Representation> copies;
    std::vector<Matrix> fv(a->num_vertices(), Matrix());
    for (int v = 0; v < a->num_vertices(); ++v) fv[v] = Matrix(a->field(), 0, x.dim(v));
    for (const auto& ui : u) {
      HomSpace h = hom(x, ui);
      for (const auto& f : h.basis) {
        copies.push_back(ui);
        for (int v = 0; v < a->num_vertices(); ++v) fv[v] = fv[v].vstack(f.vertex_maps[v]);
      }
    }
    if (!copies.empty()) {
      Representation target = Representation::direct_sum(copies);
      Representation y = target.quotient_representation(fv);
      if (y.total_dim() > 0) {
        for (const auto& part : decompose(y).parts) {
          bool in_add_u = false;
          for (const auto& ui : u)
            if (iso_class_key(part.rep) == iso_class_key(ui) && is_isomorphic(part.rep, ui)) {
              in_add_u = true;
              break;
            }
          if (in_add_u) continue;
          bool seen = false;
          for (const auto& z : new_class)
            if (is_isomorphic(part.rep, z)) seen = true;
          if (!seen) new_class.push_back(part.rep);
        }
      }
    }
  }
  if (new_class.size() > 1)
    throw std::logic_error("mutation produced more than one new summand class");

  MutationOutcome out;
  out.fac_decreasing = true;
  if (!new_class.empty()) {
    std::vector<Representation> parts = u;
    parts.push_back(new_class[0]);
    out.pair = check_support_tau_tilting(Representation::direct_sum(parts), rp.p_vertices);
  } else {
    // the summand leaves the module part entirely; exactly one support
    // vertex completes the pair
    std::vector<SupportTauTiltingPair> found;
    for (int v = 0; v < a->num_vertices(); ++v) {
      if (std::count(rp.p_vertices.begin(), rp.p_vertices.end(), v)) continue;
      if (u_sum.dim(v) != 0) continue;
      std::vector<int> p2 = rp.p_vertices;
      p2.push_back(v);
      auto cand = check_support_tau_tilting(u_sum, p2);
      if (cand.valid()) found.push_back(cand);
    }
    if (found.size() != 1)
      throw std::logic_error("support mutation is not unique: " +
                             std::to_string(found.size()) + " candidates");
    out.pair = found[0];
  }
  if (!out.pair.valid()) throw std::logic_error("mutation result failed re-verification");
  if (pairs_isomorphic(out.pair.rp, rp)) throw std::logic_error("mutation returned its input");
  Representation new_sum = out.pair.rp.m_sum();
  if (!fac_membership(new_sum, old_sum) || fac_membership(old_sum, new_sum))
    throw std::logic_error("mutation did not strictly shrink the torsion class");
  // the untouched summands must survive
  for (const auto& ui : u) {
    bool present = false;
    for (const auto& part : out.pair.rp.m_parts)
      if (is_isomorphic(ui, part)) present = true;
    if (!present) throw std::logic_error("mutation lost an untouched summand");
  }
  return out;
}

}  // namespace

MutationOutcome mutate_with_direction(const SupportTauTiltingPair& pair, int position) {
  if (!pair.valid()) throw std::invalid_argument("mutation requires a verified pair");
  const RigidPair& rp = pair.rp;
  if (position < 0 || position >= rp.size())
    throw std::invalid_argument("mutation position out of range");
  int nm = static_cast<int>(rp.m_parts.size());
  // the dagger image of the exchanged slot: the transpose of a
  // non-projective summand, or the opposite projective of a support slot
  std::optional<Representation> partner;
  if (position < nm) {
    std::vector<Representation> u;
    for (int i = 0; i < nm; ++i)
      if (i != position) u.push_back(rp.m_parts[i]);
    bool up = !u.empty() && fac_membership(rp.m_parts[position], sum_or_zero(rp.algebra, u));
    if (!up) return mutate_down(pair, position);
    if (rp.part_projective_vertex[position] >= 0)
      throw std::logic_error("a projective summand cannot lie in Fac of the complement");
    partner = transpose(rp.m_parts[position]);
  } else {
    partner = Representation::projective(opposite_of(rp.algebra),
                                         rp.p_vertices[position - nm]);
  }
  RigidPair d = dagger(rp);
  // check_pair re-decomposes, so the slot is found by iso, not by index
  int dagger_position = -1;
  for (size_t i = 0; i < d.m_parts.size(); ++i)
    if (is_isomorphic(d.m_parts[i], *partner)) dagger_position = static_cast<int>(i);
  if (dagger_position < 0)
    throw std::logic_error("the exchanged summand has no dagger partner");
  SupportTauTiltingPair dpair;
  dpair.rp = d;
  dpair.count_complete = d.size() == d.algebra->num_vertices();
  if (!dpair.valid()) throw std::logic_error("dagger image is not support tau-tilting");
  MutationOutcome down = mutate_down(dpair, dagger_position);
  MutationOutcome out;
  out.fac_decreasing = false;
  RigidPair back = dagger(down.pair.rp);
  out.pair = check_support_tau_tilting(back.m_sum(), back.p_vertices);
  if (!out.pair.valid()) throw std::logic_error("mutation result failed re-verification");
  if (pairs_isomorphic(out.pair.rp, rp)) throw std::logic_error("mutation returned its input");
  Representation old_sum = rp.m_sum(), new_sum = out.pair.rp.m_sum();
  if (!fac_membership(old_sum, new_sum) || fac_membership(new_sum, old_sum))
    throw std::logic_error("mutation did not strictly grow the torsion class");
  return out;
}

SupportTauTiltingPair mutate(const SupportTauTiltingPair& pair, int position) {
  return mutate_with_direction(pair, position).pair;
}

namespace {

std::string node_key(const RigidPair& rp) {
  std::vector<std::string> keys;
  for (const auto& p : rp.m_parts) keys.push_back(iso_class_key(p));
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  for (const auto& k : keys) os << k << "&";
  os << "|P";
  for (int v : rp.p_vertices) os << ":" << v;
  return os.str();
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const AlgebraPtr& a, int max_nodes) {
  if (max_nodes < 1) throw std::invalid_argument("node budget must be at least 1");
  ExchangeGraph g;
  g.algebra = a;
  g.complete = true;
  std::map<std::string, std::vector<int>> buckets;
  auto find_or_insert = [&](const SupportTauTiltingPair& p) -> int {
    std::string key = node_key(p.rp);
    for (int idx : buckets[key])
      if (pairs_isomorphic(g.nodes[idx].rp, p.rp)) return idx;
    if (static_cast<int>(g.nodes.size()) >= max_nodes) return -1;  // budget
    g.nodes.push_back(p);
    buckets[key].push_back(static_cast<int>(g.nodes.size()) - 1);
    return static_cast<int>(g.nodes.size()) - 1;
  };
  auto root = check_support_tau_tilting(Representation::regular(a), {});
  if (!root.valid()) throw std::logic_error("the regular module is not a tau-tilting pair");
  find_or_insert(root);
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    SupportTauTiltingPair node = g.nodes[i];  // copy: nodes may reallocate
    for (int pos = 0; pos < node.rp.size(); ++pos) {
      MutationOutcome out = mutate_with_direction(node, pos);
      int j = find_or_insert(out.pair);
      if (j < 0) {
        g.complete = false;
        continue;
      }
      // record each oriented edge from its larger end only, so it is
      // stored exactly once with a well-defined position
      if (out.fac_decreasing)
        g.edges.push_back({static_cast<int>(i), j, pos});
    }
  }
  return g;
}

GpFilterResult gp_filter(const ExchangeGraph& g, int bound) {
  if (!g.complete) throw std::invalid_argument("gp filter requires a complete exchange graph");
  GpFilterResult r;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    GpVerdict v = gp_status(g.nodes[i].rp, bound);
    if (v.status == GpVerdict::Status::CertifiedGP) {
      if (g.nodes[i].rp.p_vertices.empty())
        r.gp_tau_tilting.push_back(static_cast<int>(i));
      else
        r.gp_proper_support.push_back(static_cast<int>(i));
    } else if (v.status == GpVerdict::Status::VanishesUpToBound) {
      r.undecided.push_back(static_cast<int>(i));
    }
  }
  return r;
}

std::vector<Representation> indecomposable_gp_tau_rigid(const ExchangeGraph& g, int bound) {
  if (!g.complete) throw std::invalid_argument("requires a complete exchange graph");
  std::vector<Representation> all;
  for (const auto& node : g.nodes)
    for (const auto& part : node.rp.m_parts) {
      bool seen = false;
      for (const auto& m : all)
        if (iso_class_key(m) == iso_class_key(part) && is_isomorphic(m, part)) seen = true;
      if (!seen) all.push_back(part);
    }
  std::vector<Representation> out;
  for (const auto& m : all)
    if (gp_verdict(m, bound).certified_gp()) out.push_back(m);
  return out;
}

SupportTauTiltingPair bongartz_completion(const Representation& m, const ExchangeGraph& g) {
  if (!g.complete)
    throw std::invalid_argument("bongartz completion needs a complete exchange graph");
  if (!is_tau_rigid(m)) throw std::invalid_argument("bongartz completion needs a tau-rigid input");
  if (m.total_dim() == 0) {
    RigidPair root = check_pair(Representation::regular(g.algebra), {});
    for (const auto& n : g.nodes)
      if (pairs_isomorphic(n.rp, root)) return n;
    throw std::logic_error("complete graph is missing the regular node");
  }
  Representation tm = tau(m);
  RigidPair mrp = check_pair(m, {});  // m may be decomposable
  std::vector<int> in_perp;  // nodes whose torsion class sits inside perp(tau M)
  std::vector<int> candidates;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    Representation sum = g.nodes[i].rp.m_sum();
    if (tm.total_dim() > 0 && dim_hom(sum, tm) != 0) continue;
    in_perp.push_back(static_cast<int>(i));
    bool contains = true;
    for (const auto& want : mrp.m_parts) {
      bool hit = false;
      for (const auto& part : g.nodes[i].rp.m_parts)
        if (is_isomorphic(part, want)) hit = true;
      if (!hit) contains = false;
    }
    if (contains) candidates.push_back(static_cast<int>(i));
  }
  std::vector<int> maxima;
  for (int c : candidates) {
    Representation csum = g.nodes[c].rp.m_sum();
    bool is_max = true;
    for (int o : in_perp)
      if (!fac_membership(g.nodes[o].rp.m_sum(), csum)) is_max = false;
    if (is_max) maxima.push_back(c);
  }
  if (maxima.size() != 1)
    throw std::logic_error("bongartz completion is not unique in the enumerated lattice");
  const SupportTauTiltingPair& b = g.nodes[maxima[0]];
  if (!b.rp.p_vertices.empty())
    throw std::logic_error("bongartz completion came out with nonempty support part");
  return b;
}

CmTauVerdict cm_tau_finiteness(const AlgebraPtr& a, int budget) {
  CmTauVerdict v;
  ExchangeGraph g = enumerate_exchange_graph(a, budget);
  if (g.complete) {
    v.status = CmTauVerdict::Status::Finite;
    v.route = CmTauVerdict::Route::TauTiltingFiniteEnumeration;
    v.witness = "exchange graph closed with " + std::to_string(g.nodes.size()) + " nodes";
    return v;
  }
  auto gd = global_dimension_probe(a, 12);
  if (gd) {
    v.status = CmTauVerdict::Status::Finite;
    v.route = CmTauVerdict::Route::FiniteGlobalDimension;
    v.witness = "global dimension " + std::to_string(*gd);
    return v;
  }
  if (a->radical_square_zero()) {
    v.status = CmTauVerdict::Status::Finite;
    v.route = CmTauVerdict::Route::RadicalSquareZeroDichotomy;
    v.witness = is_self_injective(a).self_injective
                    ? "radical square zero, self-injective"
                    : "radical square zero, stable Gorenstein-projective-free";
    return v;
  }
  v.status = CmTauVerdict::Status::Undecided;
  v.witness = "no decision route applied within the budget";
  return v;
}

}  // namespace taugp
