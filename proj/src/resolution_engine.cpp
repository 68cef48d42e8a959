#include "slopelab/resolution_engine.hpp"

#include <string>

#include "slopelab/errors.hpp"

namespace slopelab {

namespace {

bool is_pair_first(const SingularityNode& node) {
    return node.multiplicity % 2 == 1 && node.children.size() == 1 &&
           node.children.front().multiplicity == node.multiplicity + 1;
}

void validate_node(const SingularityNode& node, long g, const std::string& path) {
    if (node.multiplicity < 2) {
        throw ValidationError("node " + path + ": multiplicity " +
                              std::to_string(node.multiplicity) + " is below 2");
    }
    if (node.multiplicity > g + 2) {
        throw ValidationError("node " + path + ": multiplicity " +
                              std::to_string(node.multiplicity) +
                              " exceeds g+2 = " + std::to_string(g + 2));
    }
    const long cap =
        node.multiplicity % 2 == 0 ? node.multiplicity : node.multiplicity + 1;
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        const auto& child = node.children[c];
        const std::string child_path = path + ".child[" + std::to_string(c) + "]";
        if (child.multiplicity > cap) {
            throw ValidationError(
                "node " + child_path + ": multiplicity " +
                std::to_string(child.multiplicity) + " exceeds the bound " +
                std::to_string(cap) + " forced by its parent of multiplicity " +
                std::to_string(node.multiplicity));
        }
        validate_node(child, g, child_path);
    }
}

void classify_node(const SingularityNode& node, SingularityIndexVector& indices) {
    if (is_pair_first(node)) {
        indices.set(node.multiplicity, indices.at(node.multiplicity) + 1);
        // The unique child is the pair's second component; only its own
        // children classify further.
        for (const auto& grandchild : node.children.front().children) {
            classify_node(grandchild, indices);
        }
        return;
    }
    const long even_index =
        node.multiplicity % 2 == 0 ? node.multiplicity : node.multiplicity - 1;
    if (even_index >= 4) {
        indices.set(even_index, indices.at(even_index) + 1);
    }
    for (const auto& child : node.children) {
        classify_node(child, indices);
    }
}

void trace_node(const SingularityNode& node, ResolutionTrace& trace) {
    trace.half_multiplicities.push_back(node.multiplicity / 2);
    ++trace.blowup_count;
    for (const auto& child : node.children) {
        trace_node(child, trace);
    }
}

}  // namespace

void validate_forest(const SingularityForest& forest, bool strict) {
    if (forest.g < 2) {
        throw ValidationError("genus g = " + std::to_string(forest.g) + " is below 2");
    }
    if (forest.g > 1000000) {
        throw ValidationError("genus g = " + std::to_string(forest.g) +
                              " is beyond the supported range for forests");
    }
    for (std::size_t f = 0; f < forest.fibers.size(); ++f) {
        for (std::size_t r = 0; r < forest.fibers[f].roots.size(); ++r) {
            validate_node(forest.fibers[f].roots[r], forest.g,
                          "fiber[" + std::to_string(f) + "].root[" + std::to_string(r) +
                              "]");
        }
    }
    if (strict && forest.g % 2 == 0) {
        const auto classified = classify_indices(forest);
        if (classified.total.at(forest.g + 2) != 0) {
            throw ValidationError(
                "strict mode: even-genus forest classifies s_{g+2} = " +
                std::to_string(classified.total.at(forest.g + 2)) + ", must be 0");
        }
    }
}

ClassifiedIndices classify_indices(const SingularityForest& forest) {
    validate_forest(forest);
    ClassifiedIndices result;
    result.total = SingularityIndexVector::zero(forest.g);
    for (const auto& fiber : forest.fibers) {
        SingularityIndexVector per = SingularityIndexVector::zero(forest.g);
        for (const auto& root : fiber.roots) {
            classify_node(root, per);
        }
        for (long i = 3; i <= forest.g + 2; ++i) {
            result.total.set(i, result.total.at(i) + per.at(i));
        }
        result.per_fiber.push_back(std::move(per));
    }
    return result;
}

Rational s2_from_n(const SingularityForest& forest,
                   const SingularityIndexVector& classified) {
    const long g = forest.g;
    Rational s2 = rat(2 * (2 * g + 1)) * forest.n -
                  Rational(2 * Integer(g * g + 3 * g + 1) * classified.at(g + 2));
    for (long k = 1; k <= g / 2; ++k) {
        s2 -= Rational(2 * Integer(4 * k * k + 2 * k) * classified.at(2 * k + 1));
    }
    for (long k = 2; k <= (g + 1) / 2; ++k) {
        s2 -= Rational(2 * Integer(2 * k * k - k) * classified.at(2 * k));
    }
    if (forest.explicit_s2 && rat(*forest.explicit_s2) != s2) {
        throw IndexMismatchError(std::to_string(*forest.explicit_s2), to_string(s2));
    }
    return s2;
}

RationalIndexVector classified_vector(const SingularityForest& forest) {
    const auto classified = classify_indices(forest);
    RationalIndexVector v = to_rational(classified.total);
    v.at(2) = s2_from_n(forest, classified.total);
    return v;
}

long minus_one_count(const SingularityIndexVector& classified) {
    long count = 2 * classified.at(classified.g + 2);
    for (long k = 1; k <= classified.g / 2; ++k) {
        count += classified.at(2 * k + 1);
    }
    return count;
}

ResolutionResult resolve_invariants(const SingularityForest& forest) {
    validate_forest(forest);
    const long g = forest.g;

    ResolutionResult result;
    for (const auto& fiber : forest.fibers) {
        for (const auto& root : fiber.roots) {
            trace_node(root, result.trace);
        }
    }

    Rational sum_h = 0, sum_h_sq = 0;
    for (long h : result.trace.half_multiplicities) {
        sum_h += h;
        sum_h_sq += h * h;
    }
    const Rational l_hat_sq = rat(g + 1) * forest.n - sum_h_sq;
    const Rational k_dot_l = -forest.n + sum_h;
    const Rational k_rel_sq = rat(-result.trace.blowup_count);

    const auto classified = classify_indices(forest);
    result.trace.minus_one_curve_count = minus_one_count(classified.total);

    result.invariants.chi = (l_hat_sq + k_dot_l) / 2;
    const Rational k_tilde_sq = 2 * (l_hat_sq + 2 * k_dot_l + k_rel_sq);
    result.invariants.k2 = k_tilde_sq + result.trace.minus_one_curve_count;
    result.invariants.e = 12 * result.invariants.chi - result.invariants.k2;
    return result;
}

}  // namespace slopelab
