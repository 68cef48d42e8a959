#ifndef SLOPELAB_INVARIANT_CORE_HPP
#define SLOPELAB_INVARIANT_CORE_HPP

#include <utility>
#include <vector>

#include "slopelab/rational.hpp"

namespace slopelab {

// A fiber genus g >= 2 together with the relative irregularity q_f of the
// fibration, 0 <= q_f <= floor((g+1)/2). Only validated instances exist.
struct GenusProfile {
    long g = 2;
    long qf = 0;
};

// floor((g+1)/2), the largest admissible q_f at genus g.
long max_irregularity(long g);

GenusProfile validate_profile(long g, long qf);

// The sharp lower bound lambda_{g,q_f} for the slope:
//   8 - 4(g+1)/((q_f+1)(g-q_f))   if q_f <= (g-1)/2
//   8(g-1)/g                      if g even and q_f = g/2
//   8                             if g odd and q_f = (g+1)/2
Rational lambda_bound(const GenusProfile& p);

// The conjectured lower bound 4(g-1)/(g-q_f).
Rational conjecture_bound(const GenusProfile& p);

// lambda_{g,q_f} - 4(g-1)/(g-q_f) in closed form,
// 4 q_f (g - 2q_f - 1) / ((q_f+1)(g-q_f)). Only defined for q_f <= (g-1)/2;
// other profiles must take the plain difference of the two bounds.
Rational bound_gap(const GenusProfile& p);

struct XiaoCoefficients {
    Rational a;  // 12k(g-k) - 2g - 1
    Rational b;  // 6k(g-k+1) - 4g - 2
};

// Coefficient pair (a_k, b_k) of the invariant formulas, 1 <= k <= floor((g+1)/2).
XiaoCoefficients xiao_coefficients(long g, long k);

// Integer singularity indices (s_2, s_3, ..., s_{g+2}). s_2 carries no sign
// restriction; s_i >= 0 for i >= 3.
struct SingularityIndexVector {
    long g = 2;
    long s2 = 0;
    std::vector<long> counts;  // counts[i-3] = s_i for 3 <= i <= g+2

    static SingularityIndexVector zero(long g);
    long at(long i) const;
    void set(long i, long value);
};

// Throws ValidationError unless every invariant holds. In strict mode an
// even-genus vector must additionally have s_{g+2} = 0.
void validate_index_vector(const SingularityIndexVector& v, bool strict = false);

// Rational-valued index vector (LP vertices, extremal rays).
struct RationalIndexVector {
    long g = 2;
    std::vector<Rational> entries;  // entries[i-2] = s_i for 2 <= i <= g+2

    static RationalIndexVector zero(long g);
    const Rational& at(long i) const;
    Rational& at(long i);
};

RationalIndexVector to_rational(const SingularityIndexVector& v);

// Relative invariants of the fibration; 12 chi = k2 + e by construction.
struct RelativeInvariants {
    Rational k2;
    Rational chi;
    Rational e;

    bool integral() const { return is_integral(k2) && is_integral(chi); }
};

RelativeInvariants relative_invariants(const SingularityIndexVector& v);
RelativeInvariants relative_invariants(const RationalIndexVector& v);

// K_f^2 / chi_f. Throws LocallyTrivialError when chi = 0 and
// NegativeChiError when chi < 0.
Rational slope(const SingularityIndexVector& v);
Rational slope(const RationalIndexVector& v);

// n = L^2/(g+1) expanded in the indices.
Rational n_from_indices(const SingularityIndexVector& v);
Rational n_from_indices(const RationalIndexVector& v);

// The coefficient system of the bound proof; every entry is non-negative on
// admissible profiles with q_f >= 1, and the vanishing entries mark the
// extremal face.
struct CoefficientSet {
    Rational lambda;
    Rational alpha;
    std::vector<std::pair<long, Rational>> alpha_k;  // k = 1 .. q_f - 1
    std::vector<std::pair<long, Rational>> beta_k;   // k = 2 .. q_f
    std::vector<std::pair<long, Rational>> gamma_k;  // k = q_f .. floor(g/2)
    std::vector<std::pair<long, Rational>> delta_k;  // k = q_f + 1 .. floor((g+1)/2)

    bool all_nonnegative() const;
};

// Requires q_f >= 1; there is no coefficient system at q_f = 0.
CoefficientSet proof_coefficients(const GenusProfile& p);

}  // namespace slopelab

#endif
