#ifndef SLOPELAB_CONE_OPTIMIZER_HPP
#define SLOPELAB_CONE_OPTIMIZER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slopelab/invariant_core.hpp"

namespace slopelab {

// Linear form over the index variables s_i, 2 <= i <= g+2. Absent indices
// carry coefficient zero.
struct LinearForm {
    std::map<long, Rational> coefficients;
    Rational constant = 0;

    Rational coeff(long i) const;
    void add(long i, const Rational& value);
    Rational evaluate(const RationalIndexVector& v) const;
    void add_scaled(const LinearForm& other, const Rational& scale);
    bool same_form(const LinearForm& other) const;  // ignores zero entries
};

// K_f^2 and chi_f as forms in the s_i.
LinearForm k2_form(long g);
LinearForm chi_form(long g);

// The cone constraint Lambda_h - s_2 as a form (required >= 0). q_f >= 1.
LinearForm build_constraint(const GenusProfile& p);

// minimize objective subject to normalization = 1 and every inequality >= 0.
struct ConeProgram {
    GenusProfile profile;
    LinearForm objective;      // K_f^2
    LinearForm normalization;  // chi_f, pinned to 1
    std::vector<std::pair<std::string, LinearForm>> inequalities;
};

ConeProgram build_program(const GenusProfile& p);

struct OptimizationResult {
    Rational minimum;
    RationalIndexVector optimal_point;
    std::vector<std::string> tight_constraints;
    // objective - minimum * normalization == sum multiplier * inequality,
    // with every multiplier >= 0.
    std::map<std::string, Rational> certificate;
};

// Exact simplex over the cone. Throws UnboundedError / InfeasibleError;
// either outcome on a valid profile is a bound violation and must never
// be swallowed.
OptimizationResult minimize(const ConeProgram& prog);

// Recombines the certificate from the program text alone; trusts nothing
// from the solver run.
bool verify_certificate(const ConeProgram& prog, const Rational& minimum,
                        const std::map<std::string, Rational>& certificate);

// A nonzero feasible point of slope exactly lambda_{g,q_f}. q_f >= 1.
RationalIndexVector extremal_ray(const GenusProfile& p);

struct SharpnessReport {
    GenusProfile profile;
    Rational bound;
    Rational lp_minimum;
    bool equal = false;
    RationalIndexVector witness;
    Rational witness_slope;
    bool witness_attains = false;
    std::map<std::string, Rational> certificate;
    bool certificate_valid = false;

    bool ok() const { return equal && witness_attains && certificate_valid; }
};

SharpnessReport verify_sharpness(const GenusProfile& p);

}  // namespace slopelab

#endif
