#ifndef SLOPELAB_TESTS_FOREST_GEN_HPP
#define SLOPELAB_TESTS_FOREST_GEN_HPP

// Random valid singularity forests for the dual-path tests. Even-genus
// forests never receive an unpaired multiplicity-(g+2) node: the minimal
// model a forest abstracts never contains one, and the index formulas only
// cover the paired shape.

#include <random>
#include <vector>

#include "slopelab/resolution_engine.hpp"

namespace slopelab::forestgen {

namespace detail {

inline bool is_pair_first(const SingularityNode& node) {
    return node.multiplicity % 2 == 1 && node.children.size() == 1 &&
           node.children.front().multiplicity == node.multiplicity + 1;
}

inline long draw_multiplicity(std::mt19937_64& rng, long g, long cap) {
    long top = std::min(cap, g + 2);
    if (g % 2 == 0) top = std::min(top, g + 1);  // no stray g+2 nodes on even g
    std::uniform_int_distribution<long> dist(2, top);
    return dist(rng);
}

inline void grow(std::mt19937_64& rng, SingularityNode& node, long g, int& budget,
                 int depth) {
    if (budget <= 0 || depth > 4) return;
    std::uniform_int_distribution<int> coin(0, 99);

    // Sometimes complete an odd node into a pair; the +1 child is legal even
    // at multiplicity g+2.
    if (node.multiplicity % 2 == 1 && node.multiplicity + 1 <= g + 2 &&
        coin(rng) < 40 && budget > 0) {
        SingularityNode second;
        second.multiplicity = node.multiplicity + 1;
        --budget;
        node.children.push_back(second);
        grow(rng, node.children.back(), g, budget, depth + 1);
        return;  // exactly one child keeps the pair intact
    }

    const long cap =
        node.multiplicity % 2 == 0 ? node.multiplicity : node.multiplicity + 1;
    std::uniform_int_distribution<int> n_children(0, 2);
    const int wanted = n_children(rng);
    for (int c = 0; c < wanted && budget > 0; ++c) {
        SingularityNode child;
        child.multiplicity = draw_multiplicity(rng, g, cap);
        // Two children of an odd parent must not look like a pair; demote a
        // would-be +1 child.
        if (node.multiplicity % 2 == 1 && wanted > 1 &&
            child.multiplicity == node.multiplicity + 1) {
            child.multiplicity = node.multiplicity;
        }
        --budget;
        node.children.push_back(child);
        grow(rng, node.children.back(), g, budget, depth + 1);
    }
}

}  // namespace detail

inline SingularityForest random_forest(std::mt19937_64& rng, long g, int max_nodes) {
    SingularityForest forest;
    forest.g = g;
    std::uniform_int_distribution<long> num(-24, 96);
    std::uniform_int_distribution<long> den(1, 8);
    forest.n = rat(num(rng), den(rng));

    std::uniform_int_distribution<int> n_fibers(1, 3);
    std::uniform_int_distribution<int> n_nodes(0, max_nodes);
    int budget = n_nodes(rng);
    const int fibers = n_fibers(rng);
    for (int f = 0; f < fibers; ++f) forest.fibers.emplace_back();

    std::uniform_int_distribution<int> fiber_pick(0, fibers - 1);
    while (budget > 0) {
        SingularityNode root;
        root.multiplicity = detail::draw_multiplicity(rng, g, g + 2);
        --budget;
        auto& fiber = forest.fibers[static_cast<std::size_t>(fiber_pick(rng))];
        fiber.roots.push_back(root);
        detail::grow(rng, fiber.roots.back(), g, budget, 0);
    }
    return forest;
}

// Attaches a fresh negligible chain (multiplicities 2 and 3 only) at a safe
// position: a new root, or under a node that is not the first component of a
// pair. Returns the modified copy.
inline SingularityForest with_negligible_chain(std::mt19937_64& rng,
                                               const SingularityForest& original) {
    SingularityForest forest = original;
    std::uniform_int_distribution<int> len_dist(1, 3);
    const int length = len_dist(rng);

    SingularityNode chain;
    chain.multiplicity = 2;
    {
        std::uniform_int_distribution<int> start(0, 1);
        if (start(rng) == 1) chain.multiplicity = 3;
        SingularityNode* tip = &chain;
        for (int i = 1; i < length; ++i) {
            SingularityNode next;
            // under an even node only multiplicity <= parent survives
            std::uniform_int_distribution<long> m(2, tip->multiplicity == 2 ? 2 : 3);
            next.multiplicity = m(rng);
            tip->children.push_back(next);
            tip = &tip->children.back();
        }
    }

    // Collect attachment points: every node that is not a pair first
    // component and whose multiplicity admits the chain root.
    std::vector<SingularityNode*> spots;
    const auto collect = [&](auto&& self, SingularityNode& node) -> void {
        const long cap =
            node.multiplicity % 2 == 0 ? node.multiplicity : node.multiplicity + 1;
        if (!detail::is_pair_first(node) && chain.multiplicity <= cap) {
            spots.push_back(&node);
        }
        for (auto& child : node.children) self(self, child);
    };
    for (auto& fiber : forest.fibers) {
        for (auto& root : fiber.roots) collect(collect, root);
    }

    std::uniform_int_distribution<std::size_t> pick(0, spots.size());
    const std::size_t chosen = spots.empty() ? 0 : pick(rng);
    if (chosen == spots.size() || spots.empty()) {
        if (forest.fibers.empty()) forest.fibers.emplace_back();
        forest.fibers.front().roots.push_back(chain);
    } else {
        spots[chosen]->children.push_back(chain);
    }
    return forest;
}

}  // namespace slopelab::forestgen

#endif
