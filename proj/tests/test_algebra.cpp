#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taugp/algebra.hpp"

using namespace taugp;

namespace {

BoundQuiverAlgebra load(const std::string& name) {
  auto p = parse_algebra_file(std::string(TAUGP_DATA_DIR) + "/" + name);
  return BoundQuiverAlgebra::build(p.quiver, p.relations, p.field);
}

void check_associative(const BoundQuiverAlgebra& a) {
  for (int x = 0; x < a.dimension(); ++x)
    for (int y = 0; y < a.dimension(); ++y)
      for (int z = 0; z < a.dimension(); ++z) {
        auto xy_z = a.multiply(a.product(x, y), {{mpq_class(1), z}});
        auto x_yz = a.multiply({{mpq_class(1), x}}, a.product(y, z));
        CHECK(xy_z == x_yz);
      }
}

void check_relations_vanish(const BoundQuiverAlgebra& a) {
  for (const auto& rel : a.relations()) {
    std::map<int, mpq_class> acc;
    for (const auto& t : rel.terms) {
      int src = a.quiver().arrows[t.path.front()].source;
      for (const auto& [c, b] : a.path_normal_form(t.path, src)) acc[b] += t.coeff * c;
    }
    for (const auto& [b, c] : acc) CHECK(a.field().reduce(c) == 0);
  }
}

}  // namespace

TEST_CASE("one-vertex algebra with no arrows") {
  Quiver q{{"1"}, {}};
  auto a = BoundQuiverAlgebra::build(q, {}, Field::rationals());
  CHECK(a.dimension() == 1);
  CHECK(a.nilpotency_degree() == 0);
  CHECK(a.radical_basis().empty());
}

TEST_CASE("3d algebra: dimension 7 with the expected path residues") {
  auto a = load("3d.alg");
  CHECK(a.dimension() == 7);
  CHECK(a.nilpotency_degree() == 2);
  // e1, a1, a1 b2 from vertex 1; e2, a2, b2 from vertex 2; e3.
  CHECK(a.basis_from(0).size() == 3);
  CHECK(a.basis_from(1).size() == 3);
  CHECK(a.basis_from(2).size() == 1);
  CHECK(a.radical_basis().size() == 4);
  CHECK(!a.radical_square_zero());
  check_relations_vanish(a);
  check_associative(a);
}

TEST_CASE("3e algebra: dimension 6, radical square zero") {
  auto a = load("3e.alg");
  CHECK(a.dimension() == 6);
  CHECK(a.nilpotency_degree() == 1);
  CHECK(a.radical_basis().size() == 3);
  CHECK(a.radical_square_zero());
  check_relations_vanish(a);
  check_associative(a);
}

TEST_CASE("36 algebra: dimension 10 with projective path counts 3/4/3") {
  auto a = load("36.alg");
  CHECK(a.dimension() == 10);
  CHECK(a.basis_from(0).size() == 3);
  CHECK(a.basis_from(1).size() == 4);
  CHECK(a.basis_from(2).size() == 3);
  check_relations_vanish(a);
  check_associative(a);
}

TEST_CASE("61 algebra: dimension 10") {
  auto a = load("61.alg");
  CHECK(a.dimension() == 10);
  CHECK(a.basis_from(0).size() == 4);
  CHECK(a.basis_from(1).size() == 2);
  CHECK(a.basis_from(2).size() == 2);
  CHECK(a.basis_from(3).size() == 2);
  check_relations_vanish(a);
  check_associative(a);
}

TEST_CASE("opposite: involution, dimension preserved") {
  for (const char* name : {"3d.alg", "3e.alg", "36.alg", "61.alg", "kronecker.alg"}) {
    auto a = load(name);
    auto op = a.opposite();
    CHECK(op.dimension() == a.dimension());
    CHECK(op.opposite().same_presentation(a));
    check_relations_vanish(op);
    check_associative(op);
  }
}

TEST_CASE("kronecker: dimension 4; with one arrow removed, A2 of dimension 3") {
  auto a = load("kronecker.alg");
  CHECK(a.dimension() == 4);
  auto op = a.opposite();
  CHECK(op.dimension() == 4);
  RelationElement del{{ {mpq_class(1), {1}} }};
  auto a2 = a.quotient_by_ideal({del});
  CHECK(a2.dimension() == 3);
  CHECK(a2.quiver().arrows.size() == 1);
}

TEST_CASE("quotient_by_idempotent") {
  auto a = load("3e.alg");
  SUBCASE("kill everything") {
    auto z = a.quotient_by_idempotent({0, 1, 2});
    CHECK(z.dimension() == 0);
  }
  SUBCASE("kill vertex 1 gives hereditary 2 -> 3 of dimension 3") {
    auto q = a.quotient_by_idempotent({0});
    CHECK(q.dimension() == 3);
    CHECK(q.quiver().vertices == std::vector<std::string>{"2", "3"});
    CHECK(q.quiver().arrows.size() == 1);
    CHECK(q.relations().empty());
  }
  SUBCASE("kill nothing") {
    auto q = a.quotient_by_idempotent({});
    CHECK(q.same_presentation(a));
  }
}

TEST_CASE("quotient_by_ideal edge cases") {
  auto a = load("3e.alg");
  CHECK(a.quotient_by_ideal({}).same_presentation(a));
  RelationElement idem{{ {mpq_class(1), {}} }};
  CHECK_THROWS_WITH_AS(a.quotient_by_ideal({idem}), doctest::Contains("unsupported ideal shape"),
                       std::invalid_argument);
}

TEST_CASE("non-admissible input is rejected at the length cap") {
  // A loop with no relations has an infinite path algebra.
  Quiver q{{"1"}, {{"x", 0, 0}}};
  CHECK_THROWS_WITH_AS(BoundQuiverAlgebra::build(q, {}, Field::rationals(), 10),
                       doctest::Contains("length cap"), std::runtime_error);
  RelationElement sq{{ {mpq_class(1), {0, 0}} }};
  auto dual_numbers = BoundQuiverAlgebra::build(q, {sq}, Field::rationals(), 10);
  CHECK(dual_numbers.dimension() == 2);
}

TEST_CASE("non-homogeneous relations are rejected with an explanation") {
  Quiver q{{"1"}, {{"x", 0, 0}}};
  RelationElement bad{{ {mpq_class(1), {0, 0}}, {mpq_class(1), {0, 0, 0}} }};
  CHECK_THROWS_WITH_AS(BoundQuiverAlgebra::build(q, {bad}, Field::rationals()),
                       doctest::Contains("length-homogeneous"), std::invalid_argument);
  RelationElement tooShort{{ {mpq_class(1), {0}} }};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build(q, {tooShort}, Field::rationals()),
                  std::invalid_argument);
}

TEST_CASE("parser reports line numbers") {
  CHECK_THROWS_WITH(parse_algebra_text("vertices: 1 2\narrow a: 1 -> 2\nrelation: a*zz\n"),
                    doctest::Contains("line 3"));
  CHECK_THROWS_WITH(parse_algebra_text("vertices: 1\nbogus: 1\n"), doctest::Contains("line 2"));
  auto p = parse_algebra_text(
      "# comment\nfield: F 5\nvertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
  CHECK(p.field.is_prime_field());
  CHECK(p.quiver.arrows.size() == 2);
}

TEST_CASE("relation expression parsing with coefficients and signs") {
  auto p = parse_algebra_text(
      "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\n"
      "relation: 2*a*b - c*b\n");
  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0].terms.size() == 2);
  CHECK(p.relations[0].terms[0].coeff == 2);
  CHECK(p.relations[0].terms[1].coeff == -1);
  auto a = BoundQuiverAlgebra::build(p.quiver, p.relations, p.field);
  CHECK(a.dimension() == 3 + 3 + 1);  // e1,e2,e3, a, c, b, and one surviving length-2 residue
}
