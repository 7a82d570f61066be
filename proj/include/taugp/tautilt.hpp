#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taugp/homology.hpp"
#include "taugp/rep.hpp"

namespace taugp {

// A basic pair (M, P): M as its list of indecomposable summands, P as a
// sorted set of vertices (standing for the basic projective e_v Lambda).
struct RigidPair {
  AlgebraPtr algebra;
  std::vector<Representation> m_parts;
  std::vector<int> part_projective_vertex;  // -1 for non-projective parts
  std::vector<int> p_vertices;
  bool tau_rigid = false;
  bool pair_condition = false;  // Hom(P, M) = 0

  Representation m_sum() const;
  int size() const { return static_cast<int>(m_parts.size() + p_vertices.size()); }
};

struct SupportTauTiltingPair {
  RigidPair rp;
  bool count_complete = false;  // |M| + |P| = number of vertices
  bool valid() const { return rp.tau_rigid && rp.pair_condition && count_complete; }
};

bool is_tau_rigid(const Representation& m);

// Rejects non-basic M, naming the repeated summand.
RigidPair check_pair(const Representation& m, std::vector<int> p_vertices);
SupportTauTiltingPair check_support_tau_tilting(const Representation& m,
                                                std::vector<int> p_vertices);

// GP verdict of the pair's module part.
GpVerdict gp_status(const RigidPair& pair, int bound);

// (M, P) -> (Tr M_np + P*, M_p*) over the opposite. Input must be
// tau-rigid; the result is re-verified.
RigidPair dagger(const RigidPair& pair);

bool pairs_isomorphic(const RigidPair& a, const RigidPair& b);

struct MutationOutcome {
  SupportTauTiltingPair pair;
  bool fac_decreasing = false;  // new torsion class strictly below the old one
};

// position: 0..|m_parts|-1 for module summands, then |m_parts|..size()-1
// for support slots (in p_vertices order).
MutationOutcome mutate_with_direction(const SupportTauTiltingPair& pair, int position);
SupportTauTiltingPair mutate(const SupportTauTiltingPair& pair, int position);

struct ExchangeGraph {
  AlgebraPtr algebra;
  std::vector<SupportTauTiltingPair> nodes;
  struct Edge {
    int from = 0, to = 0;   // oriented: Fac(from) contains Fac(to)
    int position = 0;       // mutated position in the `from` node
  };
  std::vector<Edge> edges;
  bool complete = false;
};

ExchangeGraph enumerate_exchange_graph(const AlgebraPtr& a, int max_nodes);

struct GpFilterResult {
  std::vector<int> gp_tau_tilting;     // node indices, P empty
  std::vector<int> gp_proper_support;  // node indices, P nonempty
  std::vector<int> undecided;          // VanishesUpToBound
};
GpFilterResult gp_filter(const ExchangeGraph& g, int bound);

std::vector<Representation> indecomposable_gp_tau_rigid(const ExchangeGraph& g, int bound);

// Lattice search over a complete graph; throws on incomplete graphs.
SupportTauTiltingPair bongartz_completion(const Representation& m, const ExchangeGraph& g);

struct CmTauVerdict {
  enum class Status { Finite, Infinite, Undecided };
  enum class Route {
    None,
    TauTiltingFiniteEnumeration,
    FiniteGlobalDimension,
    RadicalSquareZeroDichotomy,
  };
  Status status = Status::Undecided;
  Route route = Route::None;
  std::string witness;
};

CmTauVerdict cm_tau_finiteness(const AlgebraPtr& a, int budget);

}  // namespace taugp
