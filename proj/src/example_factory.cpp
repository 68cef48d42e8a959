#include "slopelab/example_factory.hpp"

#include <string>

#include "slopelab/errors.hpp"

namespace slopelab {

long hirzebruch_intersection(long a1, long b1, long a2, long b2, long e) {
    return -a1 * a2 * e + a1 * b2 + a2 * b1;
}

ExampleReport build_ruled_cover(const RuledCoverParams& params) {
    const long m = params.m, e = params.e, b0 = params.b0, qf = params.qf;
    if (m < 2) throw ValidationError("ruled cover requires m >= 2");
    if (e < 1) throw ValidationError("ruled cover requires e >= 1");
    if (qf < 1) throw ValidationError("ruled cover requires q_f >= 1");
    if (m > 10000 || e > 10000 || b0 > 10000 || qf > 10000) {
        throw ValidationError("ruled cover parameters are beyond the supported range");
    }
    if (b0 <= m * e) {
        throw ValidationError("mC_0 + b_0 Gamma is very ample only for b_0 > m e; got b_0 = " +
                              std::to_string(b0) + " <= " + std::to_string(m * e));
    }
    const long g = m * (qf + 1) - 1;
    if (g > 1000000) {
        throw ValidationError("derived genus g = " + std::to_string(g) +
                              " is beyond the supported range");
    }
    const GenusProfile profile = validate_profile(g, qf);

    const long x = hirzebruch_intersection(m, b0, m, b0, e);

    ExampleReport report;
    report.g = g;
    report.qf = qf;
    report.invariants.k2 = (rat(4 * (m - 1) * (qf + 1), m) - 2) * x;
    report.invariants.chi = rat((m - 1) * (qf + 1), 2 * m) * x;
    report.invariants.e = 12 * report.invariants.chi - report.invariants.k2;
    report.slope = rat(8) - rat(4 * m, (m - 1) * (qf + 1));
    report.bound = lambda_bound(profile);
    report.n = rat(qf + 1) * x / m;

    // All branch singularities have multiplicity 2(q_f + 1), one per blow-up.
    SingularityIndexVector indices = SingularityIndexVector::zero(g);
    indices.set(2 * (qf + 1), x);
    RationalIndexVector vec = to_rational(indices);
    Rational s2 = rat(2 * (2 * g + 1)) * (*report.n);
    {
        const long k = qf + 1;
        s2 -= rat(2 * (2 * k * k - k)) * x;
    }
    if (!is_integral(s2)) {
        throw CrossCheckError("ruled-cover s_2 = " + to_string(s2) + " is not integral");
    }
    if (!s2.get_num().fits_slong_p()) {
        throw ValidationError("ruled-cover s_2 is beyond the supported range");
    }
    indices.s2 = s2.get_num().get_si();
    vec.at(2) = s2;
    report.index_vector = indices;

    const RelativeInvariants via_indices = relative_invariants(vec);
    if (via_indices.k2 != report.invariants.k2 || via_indices.chi != report.invariants.chi) {
        throw CrossCheckError(
            "ruled cover m=" + std::to_string(m) + " e=" + std::to_string(e) +
            " b0=" + std::to_string(b0) + " qf=" + std::to_string(qf) +
            ": closed forms give (K^2, chi) = (" + to_string(report.invariants.k2) +
            ", " + to_string(report.invariants.chi) + ") but the index vector gives (" +
            to_string(via_indices.k2) + ", " + to_string(via_indices.chi) + ")");
    }
    report.attains_bound = (report.slope == report.bound);
    return report;
}

ExampleReport build_product_quotient(const ProductQuotientParams& params) {
    const long g = params.g;
    if (g < 2) throw ValidationError("product quotient requires g >= 2");
    if (params.branch_count < 2 || params.branch_count % 2 != 0) {
        throw ValidationError("branch count |Sigma| must be even and >= 2; got " +
                              std::to_string(params.branch_count));
    }
    const long qf = (g + 1) / 2;  // g/2 when g is even
    const GenusProfile profile = validate_profile(g, qf);

    const Integer sigma(params.branch_count);
    ExampleReport report;
    report.g = g;
    report.qf = qf;
    report.invariants.k2 = Rational(2 * Integer(g - 1) * sigma);
    report.invariants.chi = g % 2 == 0 ? Rational(Integer(g) * sigma) / 4
                                       : Rational(Integer(g - 1) * sigma) / 4;
    report.invariants.e = 12 * report.invariants.chi - report.invariants.k2;
    report.slope = g % 2 == 0 ? rat(8 * (g - 1), g) : rat(8);
    report.bound = lambda_bound(profile);
    report.attains_bound = (report.slope == report.bound);

    const Rational check = report.invariants.k2 / report.invariants.chi;
    if (check != report.slope) {
        throw CrossCheckError("product quotient g=" + std::to_string(g) +
                              ": K^2/chi = " + to_string(check) +
                              " differs from the closed-form slope " +
                              to_string(report.slope));
    }
    return report;
}

}  // namespace slopelab
