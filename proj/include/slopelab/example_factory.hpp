#ifndef SLOPELAB_EXAMPLE_FACTORY_HPP
#define SLOPELAB_EXAMPLE_FACTORY_HPP

#include <optional>

#include "slopelab/invariant_core.hpp"

namespace slopelab {

// Double cover of a Hirzebruch surface branched over a pencil: realizes every
// profile with g + 1 = m(q_f + 1), m >= 2, at slope exactly lambda_{g,q_f}.
struct RuledCoverParams {
    long m = 2;    // cover degree parameter, >= 2
    long e = 1;    // Hirzebruch invariant, >= 1
    long b0 = 3;   // section twist; b0 > m e for very ampleness
    long qf = 1;   // target relative irregularity, >= 1
};

// Quotient of (fixed hyperelliptic curve) x (double cover of the base) by the
// diagonal involution: realizes the top irregularity q_f = g/2 or (g+1)/2.
struct ProductQuotientParams {
    long g = 2;
    long branch_count = 2;  // |Sigma|, even and >= 2
};

struct ExampleReport {
    long g = 2;
    long qf = 0;
    RelativeInvariants invariants;
    Rational slope;
    Rational bound;
    bool attains_bound = false;
    std::optional<SingularityIndexVector> index_vector;
    std::optional<Rational> n;
};

// (a1 C_0 + b1 Gamma).(a2 C_0 + b2 Gamma) on the Hirzebruch surface with
// C_0^2 = -e, C_0.Gamma = 1, Gamma^2 = 0.
long hirzebruch_intersection(long a1, long b1, long a2, long b2, long e);

// Throws CrossCheckError if the closed forms and the index-vector path ever
// disagree (they must not).
ExampleReport build_ruled_cover(const RuledCoverParams& params);

ExampleReport build_product_quotient(const ProductQuotientParams& params);

}  // namespace slopelab

#endif
