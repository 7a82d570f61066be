#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "taugp/homology.hpp"

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

}  // namespace

TEST_CASE("minimal presentation of a projective has empty relation part") {
  auto a = load("3d.alg");
  for (int v = 0; v < 3; ++v) {
    auto pr = minimal_presentation(Representation::projective(a, v));
    CHECK(pr.p0_vertices == std::vector<int>{v});
    CHECK(pr.p1_vertices.empty());
    CHECK(pr.kernel_rep.total_dim() == 0);
  }
}

TEST_CASE("minimal presentation of simples at vertex 1") {
  auto a = load("61.alg");
  auto pr = minimal_presentation(Representation::simple(a, 0));
  CHECK(pr.p0_vertices == std::vector<int>{0});
  std::multiset<int> p1(pr.p1_vertices.begin(), pr.p1_vertices.end());
  CHECK(p1 == std::multiset<int>{1, 2});

  auto b = load("3e.alg");
  auto pr2 = minimal_presentation(Representation::simple(b, 0));
  CHECK(pr2.p0_vertices == std::vector<int>{0});
  CHECK(pr2.p1_vertices == std::vector<int>{1});
}

TEST_CASE("syzygies on the 3-cycle are the rotated simples") {
  auto a = load("3e.alg");
  CHECK(syzygy(Representation::projective(a, 0)).total_dim() == 0);
  auto s1 = Representation::simple(a, 0);
  auto o1 = syzygy(s1);
  CHECK(is_isomorphic(o1, Representation::simple(a, 1)).has_value());
  auto o3 = syzygy(syzygy(o1));
  CHECK(is_isomorphic(o3, s1).has_value());
}

TEST_CASE("star is a duality on projectives") {
  for (const char* name : {"3d.alg", "3e.alg", "36.alg", "61.alg"}) {
    auto a = load(name);
    auto op = opposite_of(a);
    for (int v = 0; v < a->num_vertices(); ++v) {
      auto p = Representation::projective(a, v);
      auto ps = star(p);
      CHECK(is_isomorphic(ps, Representation::projective(op, v)).has_value());
      CHECK(is_isomorphic(star(ps), p).has_value());
    }
  }
}

TEST_CASE("star of the simple S(1) on the 3-cycle is one-dimensional") {
  // maps S(1) -> Lambda land in socles; only soc P(3) contains S(1)
  auto a = load("3e.alg");
  CHECK(star(Representation::simple(a, 0)).total_dim() == 1);
}

TEST_CASE("transpose: vanishing on zero, duality squared on the projective-free corpus") {
  auto a = load("3d.alg");
  CHECK(transpose(Representation::zero(a)).total_dim() == 0);
  std::vector<Representation> corpus = {Representation::simple(a, 0),
                                        Representation::simple(a, 1),
                                        make_rep(a, {0, 1, 1}, {{"b2", {1}}})};
  for (const auto& m : corpus) {
    auto tt = transpose(transpose(m));
    CHECK(is_isomorphic(tt, m).has_value());
  }
}

TEST_CASE("transpose of S(1) on the 3-cycle is the opposite simple at 2") {
  // by hand: coker of (Lambda e1 -> Lambda e2, right multiplication by
  // a1) has dimension 1, spanned by the class of e2
  auto a = load("3e.alg");
  auto t = transpose(Representation::simple(a, 0));
  CHECK(t.total_dim() == 1);
  CHECK(is_isomorphic(t, Representation::simple(opposite_of(a), 1)).has_value());
}

TEST_CASE("tau kills projectives and rotates the 3-cycle simples") {
  auto a = load("3e.alg");
  for (int v = 0; v < 3; ++v) CHECK(tau(Representation::projective(a, v)).total_dim() == 0);
  // tau S(1) = S(2): cross-checked by the AR formula, since
  // Ext^1(S(1), S(2)) = 1 = dim Hom(S(2), tau S(1))
  auto t = tau(Representation::simple(a, 0));
  CHECK(is_isomorphic(t, Representation::simple(a, 1)).has_value());
  CHECK(ext(Representation::simple(a, 0), Representation::simple(a, 1), 1) == 1);
  // AR formula sanity for a projective-free module
  auto s1 = Representation::simple(a, 0);
  CHECK(dim_hom(s1, t) == dim_hom(tau_inverse(t), t));
  CHECK(is_isomorphic(tau_inverse(t), s1).has_value());
}

TEST_CASE("nakayama functor sends projectives to injectives") {
  for (const char* name : {"3d.alg", "61.alg"}) {
    auto a = load(name);
    for (int v = 0; v < a->num_vertices(); ++v) {
      auto nu = nakayama_of_projective(Representation::projective(a, v));
      CHECK(is_isomorphic(nu, Representation::injective(a, v)).has_value());
      CHECK(nakayama(a, v) == Representation::injective(a, v));
    }
  }
}

TEST_CASE("ext vanishing basics") {
  auto a = load("3e.alg");
  auto reg = Representation::regular(a);
  CHECK(ext(Representation::projective(a, 1), reg, 1) == 0);
  CHECK(ext(Representation::simple(a, 0), reg, 1) == 0);  // self-injective
  // on the chain algebra, Ext^1(S(1), S(2)) detects the arrow
  auto b = load("a2.alg");
  CHECK(ext(Representation::simple(b, 0), Representation::simple(b, 1), 1) == 1);
  CHECK(ext(Representation::simple(b, 0), Representation::simple(b, 1), 2) == 0);
}

TEST_CASE("dimension probes") {
  CHECK(injective_dimension_probe(load("3d.alg"), Side::Right, 12) == 1);
  CHECK(injective_dimension_probe(load("3d.alg"), Side::Left, 12) == 1);
  CHECK(injective_dimension_probe(load("61.alg"), Side::Right, 12) == 1);
  CHECK(injective_dimension_probe(load("61.alg"), Side::Left, 12) == 1);
  auto ss = load("semisimple2.alg");
  CHECK(injective_dimension_probe(ss, Side::Right, 12) == 0);
  CHECK(global_dimension_probe(ss, 12) == 0);
  CHECK(global_dimension_probe(load("a2.alg"), 12) == 1);
  CHECK(injective_dimension_probe(load("3e.alg"), Side::Right, 12) == 0);
  CHECK(!global_dimension_probe(load("3e.alg"), 12).has_value());
}

TEST_CASE("self-injectivity recognition") {
  auto si = is_self_injective(load("3e.alg"));
  CHECK(si.self_injective);
  CHECK(si.permutation.size() == 3);
  CHECK(!is_self_injective(load("3d.alg")).self_injective);
  CHECK(!is_self_injective(load("a2.alg")).self_injective);
}

TEST_CASE("gp verdicts on the worked examples") {
  auto e = load("3e.alg");
  auto v1 = gp_verdict(Representation::simple(e, 0), 12);
  CHECK(v1.certified_gp());
  CHECK(v1.certificate == GpVerdict::Certificate::GorensteinDimension);
  CHECK(v1.gorenstein_d == 0);

  auto d = load("3d.alg");
  auto m23 = make_rep(d, {0, 1, 1}, {{"b2", {1}}});
  auto v2 = gp_verdict(m23, 12);
  CHECK(v2.certified_gp());
  CHECK(v2.certificate == GpVerdict::Certificate::GorensteinDimension);
  CHECK(v2.gorenstein_d == 1);

  auto g = load("61.alg");
  auto m13 = make_rep(g, {1, 0, 1, 0}, {{"gamma", {1}}});
  auto v3 = gp_verdict(m13, 12);
  CHECK(v3.certified_not_gp());

  auto vp = gp_verdict(Representation::projective(d, 0), 12);
  CHECK(vp.certified_gp());
  CHECK(vp.certificate == GpVerdict::Certificate::Projective);
}

TEST_CASE("gp interplay: star, syzygy, duality, finite global dimension") {
  auto d = load("3d.alg");
  auto m23 = make_rep(d, {0, 1, 1}, {{"b2", {1}}});
  auto ms = star(m23);
  CHECK(gp_verdict(ms, 12).certified_gp());
  CHECK(is_isomorphic(star(ms), m23).has_value());
  CHECK(gp_verdict(syzygy(m23), 12).certified_gp());
  // D exchanges gp and gi, status for status
  CHECK(gi_verdict(m23.dual(), 12).certified_gp());
  auto g = load("61.alg");
  auto m13 = make_rep(g, {1, 0, 1, 0}, {{"gamma", {1}}});
  CHECK(gi_verdict(m13.dual(), 12).certified_not_gp());
  // over finite global dimension, non-projective indecomposables are not gp
  auto b = load("a2.alg");
  CHECK(gp_verdict(Representation::simple(b, 0), 12).certified_not_gp());
  CHECK(gp_verdict(Representation::simple(b, 1), 12).certified_gp());  // = P(2)
}
