#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taugp/algebra.hpp"
#include "taugp/matrix.hpp"

namespace taugp {

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

AlgebraPtr make_algebra(BoundQuiverAlgebra a);
// Memoized: opposite_of(opposite_of(a)) returns a itself.
AlgebraPtr opposite_of(const AlgebraPtr& a);

// A finitely generated right module, as a representation: a space per
// vertex and a matrix per arrow a: u -> v of shape dims(v) x dims(u).
// The right action of a path a1...ak (left-to-right) is X_ak * ... * X_a1.
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> arrow_maps);

  static Representation zero(AlgebraPtr a);
  static Representation simple(AlgebraPtr a, int vertex);
  static Representation projective(AlgebraPtr a, int vertex);
  static Representation injective(AlgebraPtr a, int vertex);
  static Representation regular(AlgebraPtr a);  // Lambda as a right module
  static Representation direct_sum(const std::vector<Representation>& parts);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total_dim() const;
  bool is_zero_module() const { return total_dim() == 0; }
  const Matrix& arrow_map(int arrow) const { return arrow_maps_[arrow]; }

  // Action of a path with the given source vertex (empty path = identity).
  Matrix path_action(const std::vector<int>& path, int source_vertex) const;
  // Action of the algebra basis element b, as a map M_source -> M_target.
  Matrix basis_action(int b) const;

  // Subrepresentation spanned vertexwise by the columns of span[v]
  // (dims(v) x k_v, full column rank, closed under the arrow action).
  Representation sub_representation(const std::vector<Matrix>& span) const;
  // Quotient by the same data; proj[v] returned if requested via out param.
  Representation quotient_representation(const std::vector<Matrix>& span,
                                         std::vector<Matrix>* proj = nullptr) const;

  // The same module over an algebra with matching vertex/arrow labels
  // (e.g. a quotient algebra); validates the target's relations.
  Representation transport(const AlgebraPtr& other) const;

  // D = Hom_K(-, K): same dims, transposed matrices on reversed arrows.
  Representation dual() const;

  bool operator==(const Representation& o) const;

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<Matrix> arrow_maps_;
  void validate() const;
};

struct ModuleMap {
  const Representation* source = nullptr;
  const Representation* target = nullptr;
  std::vector<Matrix> vertex_maps;

  // Owning variant used when maps outlive the reps they connect.
  std::shared_ptr<const Representation> source_owned, target_owned;

  static ModuleMap make(const Representation& src, const Representation& tgt,
                        std::vector<Matrix> maps);
  static ModuleMap owning(Representation src, Representation tgt, std::vector<Matrix> maps);
  static ModuleMap identity(const Representation& m);
  static ModuleMap zero_map(const Representation& src, const Representation& tgt);

  bool is_intertwiner() const;
  bool is_zero() const;
  bool is_invertible() const;  // vertexwise
  ModuleMap inverse() const;
  ModuleMap then(const ModuleMap& next) const;  // first *this, then next
  ModuleMap plus(const ModuleMap& o) const;
  ModuleMap scaled(const mpq_class& c) const;
  ModuleMap power(int n) const;  // endomorphisms only
};

struct HomSpace {
  std::vector<ModuleMap> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

HomSpace hom(const Representation& m, const Representation& n);
int dim_hom(const Representation& m, const Representation& n);

std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n);

struct Decomposition {
  struct Part {
    Representation rep;
    int multiplicity = 1;
    bool projective = false;
    int projective_vertex = -1;  // valid when projective
    // Columns embedding each copy into the original module, per vertex,
    // one block per copy in order.
    std::vector<std::vector<Matrix>> inclusions;
  };
  std::vector<Part> parts;
  ModuleMap from_sum;  // direct sum (parts in order, copies adjacent) -> M
  ModuleMap to_sum;    // inverse
};

// Throws std::runtime_error("decomposition failure: ...") when the
// idempotent search exhausts its budget; never a silent wrong answer.
Decomposition decompose(const Representation& m);

bool fac_membership(const Representation& m, const Representation& t);
bool sub_membership(const Representation& m, const Representation& n);

// Basis of { lambda : T . lambda = 0 }, as combinations of algebra
// basis elements (echelonized, so monomial annihilators come out as
// single basis elements).
std::vector<AlgebraElement> annihilator(const Representation& t);

// Cheap prefilter for isomorphism-class bucketing; equal keys do not
// imply isomorphism, distinct keys refute it.
std::string iso_class_key(const Representation& m);

}  // namespace taugp
