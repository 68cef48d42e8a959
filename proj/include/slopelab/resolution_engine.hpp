#ifndef SLOPELAB_RESOLUTION_ENGINE_HPP
#define SLOPELAB_RESOLUTION_ENGINE_HPP

#include <optional>
#include <vector>

#include "slopelab/invariant_core.hpp"

namespace slopelab {

// One infinitely-near singular point of the branch divisor. The multiplicity
// is taken in the post-update transform (exceptional curve included when the
// parent multiplicity is odd); children are the singular points of the next
// transform on this blow-up's exceptional curve.
struct SingularityNode {
    long multiplicity = 2;
    std::vector<SingularityNode> children;
};

struct SingularityFiber {
    std::vector<SingularityNode> roots;
};

struct SingularityForest {
    long g = 2;
    Rational n = 0;  // L^2/(g+1)
    std::optional<long> explicit_s2;
    std::vector<SingularityFiber> fibers;
};

// Structural validation: 2 <= multiplicity <= g+2 everywhere, and a child
// may not exceed an even parent, nor an odd parent by more than one. Strict
// mode additionally rejects even-genus forests whose classification would
// give s_{g+2} > 0. Diagnostics name the offending node path.
void validate_forest(const SingularityForest& forest, bool strict = false);

struct ClassifiedIndices {
    SingularityIndexVector total;                  // s_3..s_{g+2}; s_2 stays 0
    std::vector<SingularityIndexVector> per_fiber; // diagnostics only
};

ClassifiedIndices classify_indices(const SingularityForest& forest);

// Inverts the n-expansion to recover s_2 from n and the classified indices.
// When the forest supplies an explicit s_2, agreement is checked instead and
// IndexMismatchError carries both values.
Rational s2_from_n(const SingularityForest& forest,
                   const SingularityIndexVector& classified);

// Classification plus the recovered s_2 as one rational vector.
RationalIndexVector classified_vector(const SingularityForest& forest);

// 2 s_{g+2} + sum of the odd indices: the (-1)-curves contracted to reach
// the relatively minimal model.
long minus_one_count(const SingularityIndexVector& classified);

struct ResolutionTrace {
    std::vector<long> half_multiplicities;  // [m/2] per blow-up, preorder
    long blowup_count = 0;
    long minus_one_curve_count = 0;
};

struct ResolutionResult {
    RelativeInvariants invariants;
    ResolutionTrace trace;
};

// The direct double-cover computation: resolves every node, accumulates the
// intermediate intersection numbers, and applies the (-1)-curve correction.
ResolutionResult resolve_invariants(const SingularityForest& forest);

}  // namespace slopelab

#endif
