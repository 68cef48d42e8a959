#include "slopelab/cone_optimizer.hpp"

#include <algorithm>
#include <cstddef>

#include "slopelab/errors.hpp"
#include "slopelab/simplex.hpp"

namespace slopelab {

Rational LinearForm::coeff(long i) const {
    auto it = coefficients.find(i);
    return it == coefficients.end() ? Rational(0) : it->second;
}

void LinearForm::add(long i, const Rational& value) {
    auto [it, inserted] = coefficients.try_emplace(i, value);
    if (!inserted) it->second += value;
    if (it->second == 0) coefficients.erase(it);
}

Rational LinearForm::evaluate(const RationalIndexVector& v) const {
    Rational total = constant;
    for (const auto& [i, c] : coefficients) total += c * v.at(i);
    return total;
}

void LinearForm::add_scaled(const LinearForm& other, const Rational& scale) {
    constant += scale * other.constant;
    for (const auto& [i, c] : other.coefficients) add(i, scale * c);
}

bool LinearForm::same_form(const LinearForm& other) const {
    if (constant != other.constant) return false;
    for (const auto& [i, c] : coefficients) {
        if (c != other.coeff(i)) return false;
    }
    for (const auto& [i, c] : other.coefficients) {
        if (c != coeff(i)) return false;
    }
    return true;
}

LinearForm k2_form(long g) {
    LinearForm f;
    f.add(2, rat(g - 1, 2 * g + 1));
    f.add(g + 2, rat((g - 1) * (3 * g + 1), 2 * g + 1));
    for (long k = 1; k <= g / 2; ++k) {
        f.add(2 * k + 1, xiao_coefficients(g, k).a / (2 * g + 1));
    }
    for (long k = 2; k <= (g + 1) / 2; ++k) {
        f.add(2 * k, xiao_coefficients(g, k).b / (2 * g + 1));
    }
    return f;
}

LinearForm chi_form(long g) {
    LinearForm f;
    f.add(2, rat(g, 4 * (2 * g + 1)));
    f.add(g + 2, rat(g * g - 2 * g - 1, 4 * (2 * g + 1)));
    for (long k = 1; k <= g / 2; ++k) {
        f.add(2 * k + 1, rat(k * (g - k), 2 * g + 1));
    }
    for (long k = 2; k <= (g + 1) / 2; ++k) {
        f.add(2 * k, rat(k * (g - k + 1), 2 * (2 * g + 1)));
    }
    return f;
}

LinearForm build_constraint(const GenusProfile& p) {
    if (p.qf < 1) {
        throw ValidationError("the index cone constraint requires q_f >= 1");
    }
    const long g = p.g, qf = p.qf;
    LinearForm f;
    f.add(2, rat(-1));
    for (long k = qf; k <= g / 2; ++k) {
        f.add(2 * k + 1, rat((2 * k + 1) * (2 * g + 1 - 2 * k), g + 1));
    }
    for (long k = qf + 1; k <= (g + 1) / 2; ++k) {
        f.add(2 * k, rat(2 * k * (g + 1 - k), g + 1));
    }
    f.add(g + 2, rat(g + 1));
    for (long k = 1; k <= qf - 1; ++k) {
        f.add(2 * k + 1, rat(-4 * k * (2 * k + 1)));
    }
    for (long k = 2; k <= qf; ++k) {
        f.add(2 * k, rat(-2 * k * (2 * k - 1)));
    }
    return f;
}

namespace {

std::string sign_constraint_id(long i) {
    return "s" + std::to_string(i);
}

}  // namespace

ConeProgram build_program(const GenusProfile& p) {
    validate_profile(p.g, p.qf);
    if (p.qf < 1) {
        throw ValidationError("no cone program at q_f = 0");
    }
    ConeProgram prog;
    prog.profile = p;
    prog.objective = k2_form(p.g);
    prog.normalization = chi_form(p.g);
    for (long i = 3; i <= p.g + 2; ++i) {
        LinearForm sign;
        sign.add(i, rat(1));
        prog.inequalities.emplace_back(sign_constraint_id(i), std::move(sign));
    }
    prog.inequalities.emplace_back("cone", build_constraint(p));
    return prog;
}

OptimizationResult minimize(const ConeProgram& prog) {
    const long g = prog.profile.g;
    // Columns: s_2 split into u - v, then x_i = s_i (3 <= i <= g+2), then one
    // slack per non-sign inequality. Sign constraints become variable bounds.
    std::vector<long> bounded;  // variable index per structural column after u,v
    for (long i = 3; i <= g + 2; ++i) bounded.push_back(i);
    std::size_t n_cols = 2 + bounded.size();
    std::vector<const LinearForm*> slack_forms;
    std::vector<std::string> slack_ids;
    for (const auto& [id, form] : prog.inequalities) {
        if (form.coefficients.size() == 1 && form.constant == 0 &&
            form.coefficients.begin()->second == 1 &&
            form.coefficients.begin()->first >= 3) {
            continue;  // plain sign constraint, already a variable bound
        }
        slack_forms.push_back(&form);
        slack_ids.push_back(id);
        ++n_cols;
    }

    const auto column_of = [&](long var) -> std::size_t {
        return static_cast<std::size_t>(2 + (var - 3));
    };

    lp::StandardLp std_lp;
    std_lp.cost.assign(n_cols, Rational(0));
    std_lp.cost[0] = prog.objective.coeff(2);
    std_lp.cost[1] = -prog.objective.coeff(2);
    for (long i : bounded) std_lp.cost[column_of(i)] = prog.objective.coeff(i);

    const auto form_row = [&](const LinearForm& form,
                              std::size_t slack_col) -> std::vector<Rational> {
        std::vector<Rational> row(n_cols, Rational(0));
        row[0] = form.coeff(2);
        row[1] = -form.coeff(2);
        for (long i : bounded) row[column_of(i)] = form.coeff(i);
        if (slack_col < n_cols) row[slack_col] = -1;
        return row;
    };

    std_lp.rows.push_back(form_row(prog.normalization, n_cols));
    std_lp.rhs.push_back(rat(1) - prog.normalization.constant);
    std::size_t next_slack = 2 + bounded.size();
    for (const LinearForm* form : slack_forms) {
        std_lp.rows.push_back(form_row(*form, next_slack));
        std_lp.rhs.push_back(-form->constant);
        ++next_slack;
    }

    const lp::Solution sol = lp::solve(std_lp);
    if (sol.status == lp::Status::Infeasible) {
        throw InfeasibleError("cone program at g = " + std::to_string(g) +
                              ", q_f = " + std::to_string(prog.profile.qf));
    }
    if (sol.status == lp::Status::Unbounded) {
        throw UnboundedError("cone program at g = " + std::to_string(g) +
                             ", q_f = " + std::to_string(prog.profile.qf));
    }

    OptimizationResult result;
    result.minimum = sol.objective;
    result.optimal_point = RationalIndexVector::zero(g);
    result.optimal_point.at(2) = sol.x[0] - sol.x[1];
    for (long i : bounded) result.optimal_point.at(i) = sol.x[column_of(i)];

    for (const auto& [id, form] : prog.inequalities) {
        if (form.evaluate(result.optimal_point) == 0) {
            result.tight_constraints.push_back(id);
        }
    }

    // Multipliers: reduced costs of the bounded variables for the sign
    // constraints, dual of the slacked row for everything else.
    std::vector<Rational> y = sol.duals;  // y[0] normalization, then slack rows
    for (const auto& [id, form] : prog.inequalities) {
        auto slack_pos = std::find(slack_ids.begin(), slack_ids.end(), id);
        if (slack_pos != slack_ids.end()) {
            result.certificate[id] =
                y[1 + static_cast<std::size_t>(slack_pos - slack_ids.begin())];
            continue;
        }
        const long var = form.coefficients.begin()->first;
        Rational reduced = std_lp.cost[column_of(var)];
        for (std::size_t r = 0; r < std_lp.rows.size(); ++r) {
            reduced -= y[r] * std_lp.rows[r][column_of(var)];
        }
        result.certificate[id] = reduced;
    }
    return result;
}

bool verify_certificate(const ConeProgram& prog, const Rational& minimum,
                        const std::map<std::string, Rational>& certificate) {
    LinearForm target = prog.objective;
    target.add_scaled(prog.normalization, -minimum);

    LinearForm combination;
    for (const auto& [id, form] : prog.inequalities) {
        auto it = certificate.find(id);
        const Rational multiplier = it == certificate.end() ? Rational(0) : it->second;
        if (multiplier < 0) return false;
        combination.add_scaled(form, multiplier);
    }
    for (const auto& [id, multiplier] : certificate) {
        const bool known = std::any_of(
            prog.inequalities.begin(), prog.inequalities.end(),
            [&](const auto& entry) { return entry.first == id; });
        if (!known && multiplier != 0) return false;
    }
    return target.same_form(combination);
}

RationalIndexVector extremal_ray(const GenusProfile& p) {
    validate_profile(p.g, p.qf);
    if (p.qf < 1) {
        throw ValidationError("no extremal ray at q_f = 0");
    }
    const long g = p.g, qf = p.qf;
    RationalIndexVector ray = RationalIndexVector::zero(g);
    long support;
    if (2 * qf <= g - 1) {
        support = 2 * (qf + 1);
    } else if (g % 2 == 0) {
        support = g + 1;  // qf = g/2
    } else {
        support = g + 2;  // qf = (g+1)/2
    }
    ray.at(support) = 1;
    ray.at(2) = build_constraint(p).coeff(support);
    return ray;
}

SharpnessReport verify_sharpness(const GenusProfile& p) {
    SharpnessReport report;
    report.profile = p;
    report.bound = lambda_bound(p);

    const ConeProgram prog = build_program(p);
    const OptimizationResult opt = minimize(prog);
    report.lp_minimum = opt.minimum;
    report.equal = (opt.minimum == report.bound);
    report.certificate = opt.certificate;
    report.certificate_valid = verify_certificate(prog, opt.minimum, opt.certificate);

    report.witness = extremal_ray(p);
    report.witness_slope = slope(report.witness);
    bool feasible = build_constraint(p).evaluate(report.witness) >= 0;
    for (long i = 3; i <= p.g + 2; ++i) {
        feasible = feasible && report.witness.at(i) >= 0;
    }
    report.witness_attains = feasible && (report.witness_slope == report.bound);
    return report;
}

}  // namespace slopelab
