#include "slopelab/invariant_core.hpp"

#include <string>

#include "slopelab/errors.hpp"

namespace slopelab {

long max_irregularity(long g) {
    return (g + 1) / 2;
}

GenusProfile validate_profile(long g, long qf) {
    if (g < 2) {
        throw ValidationError("genus g = " + std::to_string(g) + " is below 2");
    }
    if (g > 100000000) {  // keeps every closed-form product inside 64 bits
        throw ValidationError("genus g = " + std::to_string(g) +
                              " is beyond the supported range");
    }
    if (qf < 0) {
        throw ValidationError("relative irregularity q_f = " + std::to_string(qf) +
                              " is negative");
    }
    if (qf > max_irregularity(g)) {
        throw ValidationError("relative irregularity q_f = " + std::to_string(qf) +
                              " exceeds floor((g+1)/2) = " +
                              std::to_string(max_irregularity(g)) + " at g = " +
                              std::to_string(g));
    }
    return GenusProfile{g, qf};
}

Rational lambda_bound(const GenusProfile& p) {
    const long g = p.g, qf = p.qf;
    if (2 * qf <= g - 1) {
        return rat(8) - rat(4 * (g + 1), (qf + 1) * (g - qf));
    }
    if (g % 2 == 0) {  // qf = g/2
        return rat(8 * (g - 1), g);
    }
    return rat(8);  // g odd, qf = (g+1)/2
}

Rational conjecture_bound(const GenusProfile& p) {
    return rat(4 * (p.g - 1), p.g - p.qf);
}

Rational bound_gap(const GenusProfile& p) {
    const long g = p.g, qf = p.qf;
    if (2 * qf > g - 1) {
        throw ValidationError("bound_gap closed form requires q_f <= (g-1)/2; got q_f = " +
                              std::to_string(qf) + " at g = " + std::to_string(g));
    }
    return rat(4 * qf * (g - 2 * qf - 1), (qf + 1) * (g - qf));
}

XiaoCoefficients xiao_coefficients(long g, long k) {
    if (k < 1 || k > max_irregularity(g)) {
        throw ValidationError("coefficient index k = " + std::to_string(k) +
                              " outside 1..floor((g+1)/2) at g = " + std::to_string(g));
    }
    return XiaoCoefficients{rat(12 * k * (g - k) - 2 * g - 1),
                            rat(6 * k * (g - k + 1) - 4 * g - 2)};
}

SingularityIndexVector SingularityIndexVector::zero(long g) {
    SingularityIndexVector v;
    v.g = g;
    v.s2 = 0;
    v.counts.assign(static_cast<std::size_t>(g), 0);  // indices 3..g+2
    return v;
}

long SingularityIndexVector::at(long i) const {
    if (i == 2) return s2;
    return counts.at(static_cast<std::size_t>(i - 3));
}

void SingularityIndexVector::set(long i, long value) {
    if (i == 2) {
        s2 = value;
    } else {
        counts.at(static_cast<std::size_t>(i - 3)) = value;
    }
}

void validate_index_vector(const SingularityIndexVector& v, bool strict) {
    if (v.g < 2) {
        throw ValidationError("genus g = " + std::to_string(v.g) + " is below 2");
    }
    if (v.g > 1000000) {
        throw ValidationError("genus g = " + std::to_string(v.g) +
                              " is beyond the supported range for index vectors");
    }
    if (v.counts.size() != static_cast<std::size_t>(v.g)) {
        throw ValidationError("index vector must carry entries s_3..s_{g+2}");
    }
    for (long i = 3; i <= v.g + 2; ++i) {
        if (v.at(i) < 0) {
            throw ValidationError("s_" + std::to_string(i) + " = " +
                                  std::to_string(v.at(i)) + " is negative");
        }
    }
    if (strict && v.g % 2 == 0 && v.at(v.g + 2) != 0) {
        throw ValidationError("strict mode: s_{g+2} must vanish for even g, got s_" +
                              std::to_string(v.g + 2) + " = " +
                              std::to_string(v.at(v.g + 2)));
    }
}

RationalIndexVector RationalIndexVector::zero(long g) {
    RationalIndexVector v;
    v.g = g;
    v.entries.assign(static_cast<std::size_t>(g + 1), Rational(0));  // 2..g+2
    return v;
}

const Rational& RationalIndexVector::at(long i) const {
    return entries.at(static_cast<std::size_t>(i - 2));
}

Rational& RationalIndexVector::at(long i) {
    return entries.at(static_cast<std::size_t>(i - 2));
}

RationalIndexVector to_rational(const SingularityIndexVector& v) {
    RationalIndexVector r = RationalIndexVector::zero(v.g);
    r.at(2) = rat(v.s2);
    for (long i = 3; i <= v.g + 2; ++i) {
        r.at(i) = rat(v.at(i));
    }
    return r;
}

RelativeInvariants relative_invariants(const RationalIndexVector& v) {
    const long g = v.g;
    Rational k2_num = rat(g - 1) * (v.at(2) + rat(3 * g + 1) * v.at(g + 2));
    Rational chi_num = (rat(g) * v.at(2) + rat(g * g - 2 * g - 1) * v.at(g + 2)) / 4;
    for (long k = 1; k <= g / 2; ++k) {
        const auto c = xiao_coefficients(g, k);
        k2_num += c.a * v.at(2 * k + 1);
        chi_num += rat(k * (g - k)) * v.at(2 * k + 1);
    }
    for (long k = 2; k <= (g + 1) / 2; ++k) {
        const auto c = xiao_coefficients(g, k);
        k2_num += c.b * v.at(2 * k);
        chi_num += rat(k * (g - k + 1), 2) * v.at(2 * k);
    }
    RelativeInvariants inv;
    inv.k2 = k2_num / (2 * g + 1);
    inv.chi = chi_num / (2 * g + 1);
    inv.e = 12 * inv.chi - inv.k2;
    return inv;
}

RelativeInvariants relative_invariants(const SingularityIndexVector& v) {
    validate_index_vector(v);
    return relative_invariants(to_rational(v));
}

namespace {

Rational slope_of(const RelativeInvariants& inv) {
    if (inv.chi == 0) throw LocallyTrivialError();
    if (inv.chi < 0) throw NegativeChiError(to_string(inv.chi));
    return inv.k2 / inv.chi;
}

}  // namespace

Rational slope(const SingularityIndexVector& v) {
    return slope_of(relative_invariants(v));
}

Rational slope(const RationalIndexVector& v) {
    return slope_of(relative_invariants(v));
}

Rational n_from_indices(const RationalIndexVector& v) {
    const long g = v.g;
    Rational n = v.at(2) / (2 * (2 * g + 1)) +
                 rat(g * g + 3 * g + 1, 2 * g + 1) * v.at(g + 2);
    for (long k = 1; k <= g / 2; ++k) {
        n += rat(4 * k * k + 2 * k, 2 * g + 1) * v.at(2 * k + 1);
    }
    for (long k = 2; k <= (g + 1) / 2; ++k) {
        n += rat(2 * k * k - k, 2 * g + 1) * v.at(2 * k);
    }
    return n;
}

Rational n_from_indices(const SingularityIndexVector& v) {
    validate_index_vector(v);
    return n_from_indices(to_rational(v));
}

bool CoefficientSet::all_nonnegative() const {
    if (alpha < 0) return false;
    for (const auto& [k, c] : alpha_k)
        if (c < 0) return false;
    for (const auto& [k, c] : beta_k)
        if (c < 0) return false;
    for (const auto& [k, c] : gamma_k)
        if (c < 0) return false;
    for (const auto& [k, c] : delta_k)
        if (c < 0) return false;
    return true;
}

CoefficientSet proof_coefficients(const GenusProfile& p) {
    if (p.qf < 1) {
        throw ValidationError("no coefficient system at q_f = 0");
    }
    const long g = p.g, qf = p.qf;
    const Rational lambda = lambda_bound(p);

    CoefficientSet set;
    set.lambda = lambda;
    set.alpha = rat(g - 1) * (8 - lambda) / 4;
    for (long k = 1; k <= qf - 1; ++k) {
        set.alpha_k.emplace_back(k, rat(k * k) * lambda - rat((2 * k - 1) * (2 * k - 1)));
    }
    for (long k = 2; k <= qf; ++k) {
        set.beta_k.emplace_back(k, rat(k - 1) * (rat(k) * lambda - rat(4 * (k - 1))) / 2);
    }
    for (long k = qf; k <= g / 2; ++k) {
        const Rational num =
            rat(8 * (4 * k * (g - k) - 1)) - rat(4 * k * (g - k) + g) * lambda;
        set.gamma_k.emplace_back(k, num / (4 * (g + 1)));
    }
    for (long k = qf + 1; k <= (g + 1) / 2; ++k) {
        const Rational num = rat(k * (g + 1 - k)) * (8 - lambda) - rat(4 * (g + 1));
        set.delta_k.emplace_back(k, num / (2 * (g + 1)));
    }
    return set;
}

}  // namespace slopelab
