#pragma once

#include "taugp/tautilt.hpp"

namespace taugp {

// The torsion pair (Fac M, Sub(tau M + nu P)) attached to a support
// tau-tilting pair. Classes are kept intensionally: a generator, a
// cogenerator, and the two membership oracles.
struct TorsionPairDescriptor {
  SupportTauTiltingPair pair;
  Representation generator;    // M
  Representation cogenerator;  // tau M + nu P

  bool in_torsion(const Representation& x) const;
  bool in_torsion_free(const Representation& x) const;
};

enum class Decision { No, Yes, Undecided };

struct TorsionClassification {
  Decision gorenstein = Decision::Undecided;  // generator certified gp?
  bool trivial = false;                       // generator projective?
};

TorsionPairDescriptor torsion_pair_of(const SupportTauTiltingPair& pair);

// Ext^1(X, Fac M) = 0, tested as Hom(M, tau X) = 0. X must lie in the
// torsion class.
bool is_ext_projective_in(const Representation& x, const TorsionPairDescriptor& d);

TorsionClassification classify_torsion_pair(const TorsionPairDescriptor& d, int bound);

// Cross-checks the classification against the torsion-free side: the
// cogenerator's gi verdict must agree, and the dual of the cogenerator
// must classify identically as a torsion generator over the opposite
// algebra. Undecided verdicts never count as disagreement.
bool dual_side_check(const TorsionPairDescriptor& d, int bound);

}  // namespace taugp
