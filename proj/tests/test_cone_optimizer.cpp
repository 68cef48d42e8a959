#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slopelab/cone_optimizer.hpp"
#include "slopelab/errors.hpp"
#include "slopelab/simplex.hpp"
#include "support/vertex_enum.hpp"

using namespace slopelab;

TEST_CASE("simplex: optimal basic solution with exact duals") {
    // min -x1 - 2 x2  s.t.  x1 + x2 + x3 = 4,  x1 + 3 x2 + x4 = 6
    lp::StandardLp prob;
    prob.rows = {{rat(1), rat(1), rat(1), rat(0)}, {rat(1), rat(3), rat(0), rat(1)}};
    prob.rhs = {rat(4), rat(6)};
    prob.cost = {rat(-1), rat(-2), rat(0), rat(0)};
    const auto sol = lp::solve(prob);
    REQUIRE(sol.status == lp::Status::Optimal);
    CHECK(sol.objective == rat(-5));  // x = (3, 1)
    CHECK(sol.x[0] == 3);
    CHECK(sol.x[1] == 1);
    // dual feasibility: cost - duals . rows >= 0 componentwise
    for (std::size_t j = 0; j < prob.cost.size(); ++j) {
        Rational reduced = prob.cost[j];
        for (std::size_t i = 0; i < prob.rows.size(); ++i) {
            reduced -= sol.duals[i] * prob.rows[i][j];
        }
        CHECK(reduced >= 0);
    }
    // strong duality
    Rational dual_obj = 0;
    for (std::size_t i = 0; i < prob.rows.size(); ++i) dual_obj += sol.duals[i] * prob.rhs[i];
    CHECK(dual_obj == sol.objective);
}

TEST_CASE("simplex: infeasible and unbounded statuses") {
    {
        lp::StandardLp prob;  // x1 = -1, x1 >= 0
        prob.rows = {{rat(1)}};
        prob.rhs = {rat(-1)};
        prob.cost = {rat(0)};
        CHECK(lp::solve(prob).status == lp::Status::Infeasible);
    }
    {
        lp::StandardLp prob;  // min -x1  s.t.  x1 - x2 = 0
        prob.rows = {{rat(1), rat(-1)}};
        prob.rhs = {rat(0)};
        prob.cost = {rat(-1), rat(0)};
        CHECK(lp::solve(prob).status == lp::Status::Unbounded);
    }
    {
        lp::StandardLp prob;  // duplicated (redundant) row
        prob.rows = {{rat(1), rat(1)}, {rat(1), rat(1)}};
        prob.rhs = {rat(2), rat(2)};
        prob.cost = {rat(1), rat(0)};
        const auto sol = lp::solve(prob);
        REQUIRE(sol.status == lp::Status::Optimal);
        CHECK(sol.objective == 0);
        CHECK(sol.x[1] == 2);
    }
    {
        lp::StandardLp prob;  // negative rhs exercises the row-sign mapping
        prob.rows = {{rat(-1), rat(1)}};
        prob.rhs = {rat(-3)};
        prob.cost = {rat(1), rat(0)};
        const auto sol = lp::solve(prob);
        REQUIRE(sol.status == lp::Status::Optimal);
        CHECK(sol.objective == 3);
        CHECK(sol.x[0] == 3);
        CHECK(sol.duals[0] == rat(-1));  // duals refer to the original rows
    }
}

TEST_CASE("simplex fuzz: optimality conditions hold on random programs") {
    // Optimal answers certify themselves: primal feasibility, non-negative
    // reduced costs, and a zero duality gap together prove the objective.
    std::mt19937_64 rng(55005500);
    std::uniform_int_distribution<int> size_m(1, 4);
    std::uniform_int_distribution<int> size_n(1, 7);
    std::uniform_int_distribution<long> entry(-5, 5);
    int optimal_seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = size_m(rng);
        const int n = size_n(rng);
        lp::StandardLp prob;
        prob.cost.resize(n);
        for (auto& c : prob.cost) c = rat(entry(rng));
        for (int i = 0; i < m; ++i) {
            prob.rows.emplace_back();
            for (int j = 0; j < n; ++j) prob.rows.back().push_back(rat(entry(rng)));
            prob.rhs.push_back(rat(entry(rng)));
        }
        if (trial % 2 == 0) {
            // plant a feasible point so at least half the programs admit one
            std::uniform_int_distribution<long> x0(0, 3);
            std::vector<Rational> planted(n);
            for (auto& value : planted) value = rat(x0(rng));
            for (int i = 0; i < m; ++i) {
                prob.rhs[i] = 0;
                for (int j = 0; j < n; ++j) prob.rhs[i] += prob.rows[i][j] * planted[j];
            }
        }
        const auto sol = lp::solve(prob);
        const auto again = lp::solve(prob);
        CHECK(sol.status == again.status);  // deterministic
        if (sol.status != lp::Status::Optimal) continue;
        ++optimal_seen;
        CHECK(sol.objective == again.objective);
        for (int i = 0; i < m; ++i) {
            Rational lhs = 0;
            for (int j = 0; j < n; ++j) lhs += prob.rows[i][j] * sol.x[j];
            CHECK(lhs == prob.rhs[i]);
        }
        Rational dual_objective = 0;
        for (int i = 0; i < m; ++i) dual_objective += sol.duals[i] * prob.rhs[i];
        CHECK(dual_objective == sol.objective);
        for (int j = 0; j < n; ++j) {
            CHECK(sol.x[j] >= 0);
            Rational reduced = prob.cost[j];
            for (int i = 0; i < m; ++i) reduced -= sol.duals[i] * prob.rows[i][j];
            CHECK(reduced >= 0);
        }
    }
    CHECK(optimal_seen > 100);
}

TEST_CASE("constraint form at (3,1) and (3,2)") {
    {
        const auto form = build_constraint(validate_profile(3, 1));
        CHECK(form.coeff(2) == rat(-1));
        CHECK(form.coeff(3) == rat(15, 4));
        CHECK(form.coeff(4) == rat(2));
        CHECK(form.coeff(5) == rat(4));
        CHECK(form.constant == 0);
        CHECK(form.evaluate(RationalIndexVector::zero(3)) == 0);
    }
    {
        const auto form = build_constraint(validate_profile(3, 2));
        CHECK(form.coeff(2) == rat(-1));
        CHECK(form.coeff(3) == rat(-12));
        CHECK(form.coeff(4) == rat(-12));
        CHECK(form.coeff(5) == rat(4));
    }
    CHECK_THROWS_AS(build_constraint(GenusProfile{3, 0}), ValidationError);
}

TEST_CASE("program shape counts from the construction") {
    {
        const auto prog = build_program(validate_profile(3, 1));
        long variables = 0;
        for (long i = 2; i <= 5; ++i) {
            const bool used = prog.objective.coeff(i) != 0 ||
                              prog.normalization.coeff(i) != 0;
            if (used) ++variables;
        }
        CHECK(variables == 4);  // s_2..s_5
        CHECK(prog.inequalities.size() == 4);  // 3 sign constraints + cone
        CHECK(prog.inequalities.back().first == "cone");
        CHECK(prog.objective.evaluate(RationalIndexVector::zero(3)) == 0);
    }
    {
        const auto prog = build_program(validate_profile(2, 1));
        CHECK(prog.inequalities.size() == 3);  // s_3, s_4, cone
    }
    CHECK_THROWS_AS(build_program(GenusProfile{6, 0}), ValidationError);
}

TEST_CASE("minimize reproduces the bound table") {
    {
        const auto result = minimize(build_program(validate_profile(3, 1)));
        CHECK(result.minimum == 4);
        CHECK(result.optimal_point.at(2) == 4);
        CHECK(result.optimal_point.at(4) == 2);
        CHECK(result.optimal_point.at(3) == 0);
        CHECK(result.optimal_point.at(5) == 0);
        CHECK(result.certificate.at("cone") == rat(1, 7));
        CHECK(result.certificate.at("s3") == rat(3, 4));
        CHECK(result.certificate.at("s4") == 0);
        CHECK(result.certificate.at("s5") == 2);
        const std::vector<std::string> tight{"s3", "s5", "cone"};
        CHECK(result.tight_constraints == tight);
    }
    {
        const auto result = minimize(build_program(validate_profile(2, 1)));
        CHECK(result.minimum == 4);
        CHECK(result.certificate.at("cone") == rat(1, 5));
        CHECK(result.certificate.at("s3") == 0);
        CHECK(result.certificate.at("s4") == 1);
    }
    CHECK(minimize(build_program(validate_profile(5, 2))).minimum == rat(16, 3));
    CHECK(minimize(build_program(validate_profile(4, 2))).minimum == 6);
    CHECK(minimize(build_program(validate_profile(20, 1))).minimum == rat(110, 19));
}

TEST_CASE("certificate checker accepts solver output and rejects tampering") {
    const auto prog = build_program(validate_profile(5, 2));
    auto result = minimize(prog);
    CHECK(verify_certificate(prog, result.minimum, result.certificate));

    auto wrong_minimum = result.certificate;
    CHECK_FALSE(verify_certificate(prog, result.minimum + 1, wrong_minimum));

    auto tampered = result.certificate;
    tampered["s3"] += 1;
    CHECK_FALSE(verify_certificate(prog, result.minimum, tampered));

    auto negative = result.certificate;
    negative["cone"] = rat(-1);
    CHECK_FALSE(verify_certificate(prog, result.minimum, negative));

    auto unknown = result.certificate;
    unknown["s99"] = rat(1);
    CHECK_FALSE(verify_certificate(prog, result.minimum, unknown));
}

TEST_CASE("certificate multipliers are the proof coefficients") {
    for (const auto& [g, qf] : std::vector<std::pair<long, long>>{
             {3, 1}, {2, 1}, {5, 2}, {4, 2}, {5, 3}, {9, 4}, {10, 5}, {12, 3}}) {
        const auto p = validate_profile(g, qf);
        const auto result = minimize(build_program(p));
        const auto set = proof_coefficients(p);
        CHECK(result.certificate.at("cone") ==
              (rat(g) * set.lambda / 4 - rat(g - 1)) / (2 * g + 1));
        CHECK(result.certificate.at("s" + std::to_string(g + 2)) == set.alpha);
        for (const auto& [k, c] : set.alpha_k)
            CHECK(result.certificate.at("s" + std::to_string(2 * k + 1)) == c);
        for (const auto& [k, c] : set.beta_k)
            CHECK(result.certificate.at("s" + std::to_string(2 * k)) == c);
        for (const auto& [k, c] : set.gamma_k) {
            if (2 * k + 1 == g + 2) continue;  // top odd index reported as alpha
            CHECK(result.certificate.at("s" + std::to_string(2 * k + 1)) == c);
        }
        for (const auto& [k, c] : set.delta_k) {
            if (2 * k == g + 2) continue;
            CHECK(result.certificate.at("s" + std::to_string(2 * k)) == c);
        }
    }
}

TEST_CASE("extremal rays") {
    {
        const auto ray = extremal_ray(validate_profile(3, 1));
        CHECK(ray.at(4) == 1);
        CHECK(ray.at(2) == 2);
        CHECK(slope(ray) == 4);
    }
    {
        const auto ray = extremal_ray(validate_profile(5, 3));
        CHECK(ray.at(7) == 1);
        CHECK(ray.at(2) == 6);
        CHECK(slope(ray) == 8);
        const auto inv = relative_invariants(ray);
        CHECK(inv.k2 == 2 * (5 - 1));
        CHECK(inv.chi == rat(5 - 1, 4));
    }
    {
        // scaling preserves feasibility and slope
        auto ray = extremal_ray(validate_profile(6, 2));
        const Rational s = slope(ray);
        for (long i = 2; i <= 8; ++i) ray.at(i) *= 5;
        CHECK(slope(ray) == s);
        CHECK(build_constraint(validate_profile(6, 2)).evaluate(ray) == 0);
    }
    CHECK_THROWS_AS(extremal_ray(GenusProfile{4, 0}), ValidationError);
}

TEST_CASE("sharpness verification on frozen profiles") {
    {
        const auto report = verify_sharpness(validate_profile(4, 2));
        CHECK(report.equal);
        CHECK(report.bound == 6);
        CHECK(report.ok());
    }
    {
        const auto report = verify_sharpness(validate_profile(20, 1));
        CHECK(report.equal);
        CHECK(report.bound == rat(110, 19));
        CHECK(report.ok());
    }
    {
        const auto report = verify_sharpness(validate_profile(3, 1));
        CHECK(report.equal);
        CHECK(report.bound == 4);
        CHECK(report.ok());
    }
}

TEST_CASE("soundness and sharpness over a small grid") {
    for (long g = 2; g <= 12; ++g) {
        for (long qf = 1; qf <= max_irregularity(g); ++qf) {
            const auto p = validate_profile(g, qf);
            const auto report = verify_sharpness(p);
            CHECK(report.lp_minimum == lambda_bound(p));
            CHECK(report.ok());
            // tight-pattern: the cone constraint binds at the optimum and the
            // extremal index stays strictly positive for q_f <= (g-1)/2
            if (2 * qf <= g - 1) {
                const auto result = minimize(build_program(p));
                bool cone_tight = false;
                for (const auto& id : result.tight_constraints) {
                    if (id == "cone") cone_tight = true;
                    CHECK(id != "s" + std::to_string(2 * (qf + 1)));
                }
                CHECK(cone_tight);
                CHECK(result.optimal_point.at(2 * (qf + 1)) > 0);
            }
        }
    }
}

TEST_CASE("headroom beyond the verified grid") {
    for (const auto& [g, qf] :
         std::vector<std::pair<long, long>>{{50, 10}, {80, 7}, {200, 40}}) {
        const auto p = validate_profile(g, qf);
        const auto result = minimize(build_program(p));
        CHECK(result.minimum == lambda_bound(p));
    }
}

TEST_CASE("vertex enumeration agrees with simplex") {
    for (long g = 2; g <= 6; ++g) {
        for (long qf = 1; qf <= max_irregularity(g); ++qf) {
            const auto prog = build_program(validate_profile(g, qf));
            const auto brute = oracle::enumerate_minimum(prog);
            REQUIRE(brute.has_value());
            CHECK(brute->minimum == minimize(prog).minimum);
        }
    }
}

TEST_CASE("doctored programs surface unbounded and infeasible loudly") {
    {
        ConeProgram prog;
        prog.profile = validate_profile(3, 1);
        prog.normalization.add(3, rat(1));  // s_3 = 1
        prog.objective.add(4, rat(-1));     // push s_4 up forever
        LinearForm s3, s4;
        s3.add(3, rat(1));
        s4.add(4, rat(1));
        prog.inequalities.emplace_back("s3", s3);
        prog.inequalities.emplace_back("s4", s4);
        CHECK_THROWS_AS(minimize(prog), UnboundedError);
    }
    {
        ConeProgram prog;
        prog.profile = validate_profile(3, 1);
        // normalization is the zero form; it can never equal 1
        prog.objective.add(3, rat(1));
        LinearForm s3;
        s3.add(3, rat(1));
        prog.inequalities.emplace_back("s3", s3);
        CHECK_THROWS_AS(minimize(prog), InfeasibleError);
    }
}
