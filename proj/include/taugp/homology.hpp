#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taugp/rep.hpp"

namespace taugp {

// Minimal projective presentation P1 -> P0 -> M -> 0. The connecting
// map is stored both as a representation map and as a matrix of
// algebra elements (entry (i,j) lives in e_{u_i} Lambda e_{v_j}),
// which is what (-)* transposes.
struct ProjectivePresentation {
  std::vector<int> p0_vertices, p1_vertices;
  Representation p0_rep, p1_rep;
  ModuleMap cover;     // p0_rep -> M
  Representation kernel_rep;
  ModuleMap kernel_incl;  // kernel_rep -> p0_rep
  std::vector<std::vector<AlgebraElement>> entries;  // p0 x p1
  ModuleMap map_rep;   // p1_rep -> p0_rep
};

ProjectivePresentation minimal_presentation(const Representation& m);

// Map between direct sums of projectives from an algebra-entry matrix:
// sum_j P(cols[j]) -> sum_i P(rows[i]), entry (i,j) in e_{rows_i} A e_{cols_j},
// acting by left multiplication.
ModuleMap projective_rep_map(const AlgebraPtr& a, const std::vector<int>& rows,
                             const std::vector<int>& cols,
                             const std::vector<std::vector<AlgebraElement>>& entries);

// First syzygy with projective direct summands split off.
Representation syzygy(const Representation& m);

// (-)* = Hom(-, Lambda), landing over the opposite algebra.
Representation star(const Representation& m);
// Tr, computed from the minimal presentation of the projective-free part.
Representation transpose(const Representation& m);

Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);
Representation nakayama_of_projective(const Representation& p);
// nu P(v) without constructing P(v) first.
Representation nakayama(const AlgebraPtr& a, int vertex);

int ext(const Representation& m, const Representation& n, int i);

enum class Side { Right, Left };
std::optional<int> injective_dimension_probe(const AlgebraPtr& a, Side side, int bound);
std::optional<int> projective_dimension_probe(const Representation& m, int bound);
std::optional<int> global_dimension_probe(const AlgebraPtr& a, int bound);

struct SelfInjectivity {
  bool self_injective = false;
  // permutation[i] = j with P(i) isomorphic to I(j), when self-injective
  std::vector<int> permutation;
};
SelfInjectivity is_self_injective(const AlgebraPtr& a);

struct GpVerdict {
  enum class Status { CertifiedGP, CertifiedNotGP, VanishesUpToBound };
  enum class Certificate {
    None,
    Projective,
    GorensteinDimension,
    SyzygyPeriodicity,
    NonzeroExtWitness,
    ReflexivityFailure,
  };
  Status status = Status::VanishesUpToBound;
  Certificate certificate = Certificate::None;
  int bound_used = 0;
  int gorenstein_d = -1;   // GorensteinDimension
  int period_from = -1;    // SyzygyPeriodicity: syzygy indices k < j
  int period_to = -1;
  int witness_degree = -1;  // NonzeroExtWitness
  std::string witness_side;  // "module" or "star"

  bool certified_gp() const { return status == Status::CertifiedGP; }
  bool certified_not_gp() const { return status == Status::CertifiedNotGP; }
  std::string describe() const;
};

GpVerdict gp_verdict(const Representation& m, int bound);
GpVerdict gi_verdict(const Representation& n, int bound);

}  // namespace taugp
