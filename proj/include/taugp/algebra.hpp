#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "taugp/field.hpp"

namespace taugp {

struct Quiver {
  struct Arrow {
    std::string label;
    int source = 0;  // vertex indices
    int target = 0;
    bool operator==(const Arrow&) const = default;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& label) const;
  void validate() const;
  bool operator==(const Quiver&) const = default;
};

// A K-linear combination of parallel paths of equal length >= 2.
// Paths are arrow-index sequences composed left to right:
// in a1 a2 ... ak, target(ai) = source(a(i+1)).
struct RelationTerm {
  mpq_class coeff;
  std::vector<int> path;
};
struct RelationElement {
  std::vector<RelationTerm> terms;
};

// Linear combination of algebra basis elements, sparse.
using AlgebraElement = std::vector<std::pair<mpq_class, int>>;

class BoundQuiverAlgebra {
 public:
  struct BasisElem {
    std::vector<int> path;  // arrow indices, left to right; empty = e_source
    int source = 0;
    int target = 0;
  };

  static BoundQuiverAlgebra build(Quiver quiver, std::vector<RelationElement> relations,
                                  Field field, int length_cap = 30);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<RelationElement>& relations() const { return relations_; }
  const std::vector<BasisElem>& basis() const { return basis_; }

  int dimension() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
  int nilpotency_degree() const { return nilpotency_degree_; }

  // Basis element index of the vertex idempotent e_v.
  int idempotent_index(int v) const { return idempotent_index_[v]; }
  // Indices of basis elements with the given source/target.
  const std::vector<int>& basis_from(int v) const { return basis_from_[v]; }
  std::vector<int> basis_between(int source, int target) const;

  // Normal form of an arbitrary path (empty path = e_{at_vertex}).
  AlgebraElement path_normal_form(const std::vector<int>& path, int at_vertex) const;
  // Product of two basis elements (zero when not composable).
  const AlgebraElement& product(int i, int j) const { return mult_table_[i][j]; }
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  // Extension of a basis element by one arrow (the primitive the tables store).
  const AlgebraElement& extend(int basis_idx, int arrow_idx) const;

  // Basis of rad: all residues of length >= 1. rad^2 = 0 iff no residue
  // of length >= 2 survives.
  std::vector<int> radical_basis() const;
  bool radical_square_zero() const { return nilpotency_degree_ <= 1; }

  BoundQuiverAlgebra opposite() const;
  BoundQuiverAlgebra quotient_by_idempotent(const std::set<int>& vertices_to_kill) const;
  // Generators: single arrows (as one-term length-1 "relations") or
  // length-homogeneous parallel combinations of paths of length >= 2.
  BoundQuiverAlgebra quotient_by_ideal(const std::vector<RelationElement>& generators) const;

  bool same_presentation(const BoundQuiverAlgebra& o) const;

  // Deterministic content key, used for caching and algebra identity.
  std::string content_key() const;

 private:
  BoundQuiverAlgebra() = default;

  Quiver quiver_;
  Field field_;
  std::vector<RelationElement> relations_;
  std::vector<BasisElem> basis_;
  std::vector<int> idempotent_index_;
  std::vector<std::vector<int>> basis_from_;
  int nilpotency_degree_ = 0;
  // ext_table_[b][a]: normal form of basis path b extended by arrow a;
  // empty combo = zero. Indexed [basis][arrow], only composable pairs used.
  std::vector<std::vector<AlgebraElement>> ext_table_;
  std::vector<std::vector<AlgebraElement>> mult_table_;
};

struct ParsedAlgebraFile {
  Field field;
  Quiver quiver;
  std::vector<RelationElement> relations;
};

// Line-oriented text format:
//   field: Q            (or: field: F 5)
//   vertices: 1 2 3
//   arrow a1: 1 -> 2
//   relation: a1*a2
//   relation: b1*a2 - b2*a1
ParsedAlgebraFile parse_algebra_text(const std::string& text);
ParsedAlgebraFile parse_algebra_file(const std::string& path);

}  // namespace taugp
