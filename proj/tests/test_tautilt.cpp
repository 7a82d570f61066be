#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "taugp/tautilt.hpp"

using namespace taugp;

namespace {

AlgebraPtr load(const std::string& name) {
  auto p = parse_algebra_file(std::string(TAUGP_DATA_DIR) + "/" + name);
  return make_algebra(BoundQuiverAlgebra::build(p.quiver, p.relations, p.field));
}

Matrix mat(Field f, int r, int c, std::vector<int> vals) {
  Matrix m(f, r, c);
  size_t k = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, vals[k++]);
  return m;
}

Representation make_rep(const AlgebraPtr& a, std::vector<int> dims,
                        std::map<std::string, std::vector<int>> entries) {
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows) {
    int r = dims[ar.target], c = dims[ar.source];
    auto it = entries.find(ar.label);
    maps.push_back(it == entries.end() ? Matrix(a->field(), r, c)
                                       : mat(a->field(), r, c, it->second));
  }
  return Representation(a, std::move(dims), std::move(maps));
}

int part_position(const RigidPair& rp, const Representation& m) {
  for (size_t i = 0; i < rp.m_parts.size(); ++i)
    if (is_isomorphic(rp.m_parts[i], m)) return static_cast<int>(i);
  return -1;
}

int find_node(const ExchangeGraph& g, const SupportTauTiltingPair& p) {
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (pairs_isomorphic(g.nodes[i].rp, p.rp)) return static_cast<int>(i);
  return -1;
}

int degree(const ExchangeGraph& g, int node) {
  int d = 0;
  for (const auto& e : g.edges)
    if (e.from == node || e.to == node) ++d;
  return d;
}

// the worked tilting module over the 1 <=> 2 -> 3 algebra:
// [2/3] + [2/(1 3)] + [3]
Representation tilting_3d(const AlgebraPtr& d) {
  return Representation::direct_sum({make_rep(d, {0, 1, 1}, {{"b2", {1}}}),
                                     Representation::projective(d, 1),
                                     Representation::projective(d, 2)});
}

// the worked pair over the self-injective 3-cycle: T = S(2) + [2/3]
Representation t_module_3e(const AlgebraPtr& e) {
  return Representation::direct_sum(
      {Representation::simple(e, 1), make_rep(e, {0, 1, 1}, {{"a2", {1}}})});
}

AlgebraPtr dual_numbers() {
  auto p = parse_algebra_text(
      "field: Q\nvertices: 1\narrow x: 1 -> 1\nrelation: x*x\n");
  return make_algebra(BoundQuiverAlgebra::build(p.quiver, p.relations, p.field));
}

}  // namespace

TEST_CASE("tau-rigidity basics") {
  auto d = load("3d.alg");
  for (int v = 0; v < 3; ++v) CHECK(is_tau_rigid(Representation::projective(d, v)));
  CHECK(is_tau_rigid(Representation::zero(d)));

  auto g = load("61.alg");
  CHECK(is_tau_rigid(Representation::simple(g, 0)));

  // over the dual numbers tau S = S, so the simple is not rigid
  auto dn = dual_numbers();
  CHECK(is_tau_rigid(Representation::regular(dn)));
  CHECK(!is_tau_rigid(Representation::simple(dn, 0)));
}

TEST_CASE("pair verification") {
  auto d = load("3d.alg");
  auto root = check_support_tau_tilting(Representation::regular(d), {});
  CHECK(root.valid());
  CHECK(root.rp.m_parts.size() == 3);
  for (int pv : root.rp.part_projective_vertex) CHECK(pv >= 0);
  auto vroot = gp_status(root.rp, 12);
  CHECK(vroot.certified_gp());
  CHECK(vroot.certificate == GpVerdict::Certificate::Projective);

  auto zero = check_support_tau_tilting(Representation::zero(d), {0, 1, 2});
  CHECK(zero.valid());
  CHECK(zero.rp.m_parts.empty());
  CHECK(gp_status(zero.rp, 12).certified_gp());

  auto e = load("3e.alg");
  auto te = check_support_tau_tilting(t_module_3e(e), {0});
  CHECK(te.valid());
  CHECK(te.rp.m_parts.size() == 2);
  CHECK(gp_status(te.rp, 12).certified_gp());
  // one summand is P(2), the other is not projective
  std::multiset<int> pv(te.rp.part_projective_vertex.begin(),
                        te.rp.part_projective_vertex.end());
  CHECK(pv == std::multiset<int>{-1, 1});

  auto s1 = Representation::simple(d, 0);
  CHECK_THROWS_AS(check_pair(Representation::direct_sum({s1, s1}), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pair(s1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_pair(s1, {7}), std::invalid_argument);
  // pair condition fails when P meets the support of M
  CHECK(!check_pair(s1, {0}).pair_condition);
}

TEST_CASE("dagger on the boundary pairs") {
  auto d = load("3d.alg");
  auto op = opposite_of(d);
  auto root = check_pair(Representation::regular(d), {});
  auto rd = dagger(root);
  CHECK(rd.algebra == op);
  CHECK(rd.m_parts.empty());
  CHECK(rd.p_vertices == std::vector<int>{0, 1, 2});

  auto zero = check_pair(Representation::zero(d), {0, 1, 2});
  auto zd = dagger(zero);
  CHECK(zd.algebra == op);
  CHECK(zd.p_vertices.empty());
  CHECK(zd.m_parts.size() == 3);
  for (int pv : zd.part_projective_vertex) CHECK(pv >= 0);

  CHECK(pairs_isomorphic(dagger(rd), root));
  CHECK(pairs_isomorphic(dagger(zd), zero));

  auto bad = check_pair(Representation::simple(dual_numbers(), 0), {});
  CHECK_THROWS_AS(dagger(bad), std::invalid_argument);
}

TEST_CASE("dagger of the worked 3-cycle pair is gp over the opposite") {
  auto e = load("3e.alg");
  auto te = check_pair(t_module_3e(e), {0});
  auto td = dagger(te);
  CHECK(td.algebra == opposite_of(e));
  CHECK(td.tau_rigid);
  CHECK(td.pair_condition);
  CHECK(td.size() == 3);
  CHECK(gp_status(td, 12).certified_gp());
  CHECK(pairs_isomorphic(dagger(td), te));
}

TEST_CASE("mutation walks the chain algebra top to bottom") {
  auto a = load("a2.alg");
  auto root = check_support_tau_tilting(Representation::regular(a), {});
  auto p2 = Representation::projective(a, 1);
  int pos = part_position(root.rp, p2);
  REQUIRE(pos >= 0);
  auto out = mutate_with_direction(root, pos);
  CHECK(out.fac_decreasing);
  auto n1 = out.pair;
  CHECK(n1.rp.p_vertices.empty());
  CHECK(part_position(n1.rp, Representation::projective(a, 0)) >= 0);
  CHECK(part_position(n1.rp, Representation::simple(a, 0)) >= 0);

  // mutate twice at the same summand: back to the start, direction flipped
  int back_pos = part_position(n1.rp, Representation::simple(a, 0));
  auto back = mutate_with_direction(n1, back_pos);
  CHECK(!back.fac_decreasing);
  CHECK(pairs_isomorphic(back.pair.rp, root.rp));

  // dropping P(1) pushes the pair into the support case
  auto n2 = mutate(n1, part_position(n1.rp, Representation::projective(a, 0)));
  CHECK(n2.rp.m_parts.size() == 1);
  CHECK(n2.rp.p_vertices == std::vector<int>{1});
  auto n3 = mutate(n2, 0);
  CHECK(n3.rp.m_parts.empty());
  CHECK(n3.rp.p_vertices == std::vector<int>{0, 1});

  CHECK_THROWS_AS(mutate(root, 5), std::invalid_argument);
  SupportTauTiltingPair unverified;
  unverified.rp = check_pair(Representation::simple(a, 0), {});
  CHECK_THROWS_AS(mutate(unverified, 0), std::invalid_argument);
}

TEST_CASE("exchange graph of the chain and semisimple algebras") {
  auto a = load("a2.alg");
  auto ga = enumerate_exchange_graph(a, 10000);
  CHECK(ga.complete);
  CHECK(ga.nodes.size() == 5);
  CHECK(ga.edges.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(degree(ga, i) == 2);

  auto s = load("semisimple2.alg");
  auto gs = enumerate_exchange_graph(s, 10000);
  CHECK(gs.complete);
  CHECK(gs.nodes.size() == 4);  // all subsets of the two simples
  CHECK(gs.edges.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(degree(gs, i) == 2);
}

TEST_CASE("exchange graph of the two-relation double-arrow algebra") {
  auto a = load("36.alg");
  auto g = enumerate_exchange_graph(a, 10000);
  CHECK(g.complete);
  CHECK(g.nodes.size() == 24);
  CHECK(g.edges.size() == 36);
  for (int i = 0; i < 24; ++i) CHECK(degree(g, i) == 3);
  // node 0 is the seed (regular module, empty support part)
  CHECK(g.nodes[0].rp.p_vertices.empty());
  CHECK(g.nodes[0].rp.m_parts.size() == 3);

  // every recorded edge replays as a mutation, and mutating the target
  // back along the exchanged summand recovers the source
  for (const auto& e : g.edges) {
    auto out = mutate_with_direction(g.nodes[e.from], e.position);
    CHECK(out.fac_decreasing);
    CHECK(pairs_isomorphic(out.pair.rp, g.nodes[e.to].rp));
  }
}

TEST_CASE("exchange graph of the self-injective 3-cycle") {
  // hand count: 4 tau-tilting, 6 with one support vertex, 3 with two, 1 zero
  auto e = load("3e.alg");
  auto g = enumerate_exchange_graph(e, 10000);
  CHECK(g.complete);
  CHECK(g.nodes.size() == 14);
  CHECK(g.edges.size() == 21);
}

TEST_CASE("budget exhaustion reports an incomplete graph") {
  auto k = load("kronecker.alg");
  auto g = enumerate_exchange_graph(k, 10);
  CHECK(!g.complete);
  CHECK(g.nodes.size() == 10);
  CHECK_THROWS_AS(gp_filter(g, 12), std::invalid_argument);
  CHECK_THROWS_AS(bongartz_completion(Representation::projective(k, 0), g),
                  std::invalid_argument);
}

TEST_CASE("gp filter on the double-arrow algebra finds the two special nodes") {
  auto a = load("36.alg");
  auto g = enumerate_exchange_graph(a, 10000);
  auto r = gp_filter(g, 12);
  CHECK(r.undecided.empty());
  int projective_free = 0;
  for (int i : r.gp_tau_tilting) {
    bool pf = true;
    for (int pv : g.nodes[i].rp.part_projective_vertex)
      if (pv >= 0) pf = false;
    if (pf) ++projective_free;
  }
  CHECK(projective_free == 2);
  CHECK(find_node(g, check_support_tau_tilting(Representation::regular(a), {})) >= 0);
}

TEST_CASE("gp filter lists the worked chain of support modules") {
  auto d = load("3d.alg");
  auto g = enumerate_exchange_graph(d, 10000);
  auto r = gp_filter(g, 12);
  CHECK(r.undecided.empty());

  auto in_list = [&](const std::vector<int>& list, const SupportTauTiltingPair& p) {
    int idx = find_node(g, p);
    REQUIRE(idx >= 0);
    return std::count(list.begin(), list.end(), idx) == 1;
  };
  auto m23 = make_rep(d, {0, 1, 1}, {{"b2", {1}}});
  auto m3 = Representation::projective(d, 2);
  CHECK(in_list(r.gp_tau_tilting, check_support_tau_tilting(tilting_3d(d), {})));
  CHECK(in_list(r.gp_proper_support,
                check_support_tau_tilting(Representation::direct_sum({m23, m3}), {0})));
  CHECK(in_list(r.gp_proper_support, check_support_tau_tilting(m3, {0, 1})));
  CHECK(in_list(r.gp_proper_support,
                check_support_tau_tilting(Representation::zero(d), {0, 1, 2})));

  // a 1-Gorenstein non-self-injective algebra has nodes that are not gp
  CHECK(r.gp_tau_tilting.size() + r.gp_proper_support.size() < g.nodes.size());

  // finite global dimension: gp nodes carry projective module parts only
  auto b = load("a2.alg");
  auto gb = enumerate_exchange_graph(b, 10000);
  auto rb = gp_filter(gb, 12);
  for (int i : rb.gp_tau_tilting)
    for (int pv : gb.nodes[i].rp.part_projective_vertex) CHECK(pv >= 0);
  for (int i : rb.gp_proper_support)
    for (int pv : gb.nodes[i].rp.part_projective_vertex) CHECK(pv >= 0);
}

TEST_CASE("indecomposable gp tau-rigid modules") {
  auto b = load("a2.alg");
  auto lb = indecomposable_gp_tau_rigid(enumerate_exchange_graph(b, 10000), 12);
  CHECK(lb.size() == 2);
  for (const auto& m : lb)
    CHECK((is_isomorphic(m, Representation::projective(b, 0)) ||
           is_isomorphic(m, Representation::projective(b, 1))));

  // self-injective: every indecomposable tau-rigid module is gp
  auto e = load("3e.alg");
  auto le = indecomposable_gp_tau_rigid(enumerate_exchange_graph(e, 10000), 12);
  CHECK(le.size() == 6);  // three projectives and three simples

  auto d = load("3d.alg");
  auto ld = indecomposable_gp_tau_rigid(enumerate_exchange_graph(d, 10000), 12);
  auto contains = [&](const Representation& m) {
    for (const auto& x : ld)
      if (is_isomorphic(x, m)) return true;
    return false;
  };
  CHECK(contains(make_rep(d, {0, 1, 1}, {{"b2", {1}}})));
  for (int v = 0; v < 3; ++v) CHECK(contains(Representation::projective(d, v)));
}

TEST_CASE("bongartz completion of the regular and zero modules") {
  auto d = load("3d.alg");
  auto g = enumerate_exchange_graph(d, 10000);
  auto root = check_pair(Representation::regular(d), {});
  CHECK(pairs_isomorphic(bongartz_completion(Representation::regular(d), g).rp, root));
  CHECK(pairs_isomorphic(bongartz_completion(Representation::zero(d), g).rp, root));
  CHECK_THROWS_AS(
      bongartz_completion(Representation::simple(dual_numbers(), 0),
                          enumerate_exchange_graph(dual_numbers(), 10)),
      std::invalid_argument);
}

TEST_CASE("bongartz completion of the simple over the four-vertex algebra") {
  auto a = load("61.alg");
  auto g = enumerate_exchange_graph(a, 10000);
  REQUIRE(g.complete);
  auto s1 = Representation::simple(a, 0);
  auto b = bongartz_completion(s1, g);
  CHECK(b.valid());
  CHECK(b.rp.p_vertices.empty());
  CHECK(b.rp.m_parts.size() == 4);
  auto m13 = make_rep(a, {1, 0, 1, 0}, {{"gamma", {1}}});
  auto m12 = make_rep(a, {1, 1, 0, 0}, {{"alpha", {1}}});
  CHECK(part_position(b.rp, s1) >= 0);
  CHECK(part_position(b.rp, m13) >= 0);
  CHECK(part_position(b.rp, m12) >= 0);
  // the completion of a certified-gp rigid module fails to be gp: the
  // two injective summands have finite projective dimension
  CHECK(gp_verdict(s1, 12).certified_gp());
  CHECK(gp_status(b.rp, 12).certified_not_gp());
  CHECK(gp_verdict(m13, 12).certified_not_gp());
  CHECK(gp_verdict(m12, 12).certified_not_gp());
}

TEST_CASE("bongartz completions over radical-square-zero algebras stay gp") {
  for (const char* name : {"3e.alg", "radsq.alg"}) {
    auto a = load(name);
    auto g = enumerate_exchange_graph(a, 10000);
    REQUIRE(g.complete);
    for (const auto& m : indecomposable_gp_tau_rigid(g, 12)) {
      auto b = bongartz_completion(m, g);
      CHECK(b.valid());
      CHECK(b.rp.p_vertices.empty());
      CHECK(gp_status(b.rp, 12).certified_gp());
    }
  }
}

TEST_CASE("cm-tau-finiteness routes") {
  auto k = load("kronecker.alg");
  auto vk = cm_tau_finiteness(k, 10);
  CHECK(vk.status == CmTauVerdict::Status::Finite);
  CHECK(vk.route == CmTauVerdict::Route::FiniteGlobalDimension);

  auto e = load("3e.alg");
  auto ve = cm_tau_finiteness(e, 10000);
  CHECK(ve.status == CmTauVerdict::Status::Finite);
  CHECK(ve.route == CmTauVerdict::Route::TauTiltingFiniteEnumeration);
  // starved of budget, the radical-square-zero dichotomy still decides
  auto ve2 = cm_tau_finiteness(e, 5);
  CHECK(ve2.status == CmTauVerdict::Status::Finite);
  CHECK(ve2.route == CmTauVerdict::Route::RadicalSquareZeroDichotomy);
  CHECK(ve2.witness.find("self-injective") != std::string::npos);

  auto a36 = load("36.alg");
  auto v36 = cm_tau_finiteness(a36, 10000);
  CHECK(v36.status == CmTauVerdict::Status::Finite);
  CHECK(v36.route == CmTauVerdict::Route::TauTiltingFiniteEnumeration);
  CHECK(v36.witness.find("24") != std::string::npos);

  // double arrow 1 => 2 plus a return arrow, radical square zero: the
  // separated quiver contains a Kronecker component, so enumeration and
  // the global dimension probe both fail; the dichotomy answers cm-free
  auto p = parse_algebra_text(
      "field: Q\nvertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n"
      "arrow c: 2 -> 1\nrelation: a*c\nrelation: b*c\nrelation: c*a\n"
      "relation: c*b\n");
  auto wild = make_algebra(BoundQuiverAlgebra::build(p.quiver, p.relations, p.field));
  auto vw = cm_tau_finiteness(wild, 12);
  CHECK(vw.status == CmTauVerdict::Status::Finite);
  CHECK(vw.route == CmTauVerdict::Route::RadicalSquareZeroDichotomy);
  CHECK(vw.witness.find("free") != std::string::npos);

  // verdicts agree across the opposite algebra
  auto d = load("3d.alg");
  CHECK(cm_tau_finiteness(d, 10000).status ==
        cm_tau_finiteness(opposite_of(d), 10000).status);
}

TEST_CASE("dagger involution and gp transport across a complete graph") {
  auto d = load("3d.alg");
  auto g = enumerate_exchange_graph(d, 10000);
  REQUIRE(g.complete);
  int gp_here = 0;
  for (const auto& node : g.nodes) {
    auto img = dagger(node.rp);
    CHECK(img.size() == 3);
    CHECK(pairs_isomorphic(dagger(img), node.rp));
    bool a_gp = gp_status(node.rp, 12).certified_gp();
    bool b_gp = gp_status(img, 12).certified_gp();
    CHECK(a_gp == b_gp);
    if (a_gp) ++gp_here;
  }
  // count symmetry with the opposite algebra
  auto gop = enumerate_exchange_graph(opposite_of(d), 10000);
  REQUIRE(gop.complete);
  CHECK(gop.nodes.size() == g.nodes.size());
  int gp_there = 0;
  for (const auto& node : gop.nodes)
    if (gp_status(node.rp, 12).certified_gp()) ++gp_there;
  CHECK(gp_here == gp_there);
}

TEST_CASE("projective-free gp tau-tilting transports through transpose and tau") {
  auto a = load("36.alg");
  auto g = enumerate_exchange_graph(a, 10000);
  auto r = gp_filter(g, 12);
  int checked = 0;
  for (int i : r.gp_tau_tilting) {
    const auto& rp = g.nodes[i].rp;
    bool pf = true;
    for (int pv : rp.part_projective_vertex)
      if (pv >= 0) pf = false;
    if (!pf) continue;
    ++checked;
    Representation m = rp.m_sum();
    auto tr = transpose(m);
    CHECK(gp_verdict(tr, 12).certified_gp());
    CHECK(check_support_tau_tilting(tr, {}).valid());
    CHECK(gi_verdict(tau(m), 12).certified_gp());
  }
  CHECK(checked == 2);
}

TEST_CASE("gp tau-tilting modules over their annihilator quotients") {
  // T gp over Lambda/ann(T) only when T is the regular module of the
  // quotient; the worked tilting module fails the iso and the verdict
  auto d = load("3d.alg");
  auto t = tilting_3d(d);
  auto ann = annihilator(t);
  CHECK(!ann.empty());
  std::vector<RelationElement> gens;
  for (const auto& el : ann) {
    RelationElement re;
    for (const auto& [c, idx] : el) re.terms.push_back({c, d->basis()[idx].path});
    gens.push_back(re);
  }
  auto q = make_algebra(d->quotient_by_ideal(gens));
  CHECK(q->dimension() < d->dimension());
  auto tq = t.transport(q);
  CHECK(!is_isomorphic(tq, Representation::regular(q)));
  CHECK(gp_verdict(tq, 12).certified_not_gp());

  // the regular module is the degenerate positive case: ann = 0
  CHECK(annihilator(Representation::regular(d)).empty());
}

TEST_CASE("the 3-cycle pair loses gp over the vertex-deletion quotient") {
  auto e = load("3e.alg");
  auto q = make_algebra(e->quotient_by_idempotent({0}));
  CHECK(q->num_vertices() == 2);
  // T = S(2) + [2/3] rebuilt over the hereditary quotient 2 -> 3
  auto t = Representation::direct_sum(
      {Representation::simple(q, 0), make_rep(q, {1, 1}, {{"a2", {1}}})});
  auto pair = check_support_tau_tilting(t, {});
  CHECK(pair.valid());
  CHECK(gp_status(pair.rp, 12).certified_not_gp());
}
