#include "slopelab/io.hpp"

#include <fstream>

#include "slopelab/errors.hpp"

namespace slopelab::io {

namespace {

void check_schema(const json& j) {
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"] != 1)) {
        throw ValidationError("unsupported schema version; expected 1");
    }
}

long get_integer(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ValidationError("missing or non-integer field \"" + key + "\"");
    }
    return j[key].get<long>();
}

SingularityNode node_from_json(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("forest node must be an object with field \"m\"");
    }
    SingularityNode node;
    node.multiplicity = get_integer(j, "m");
    if (j.contains("children")) {
        if (!j["children"].is_array()) {
            throw ValidationError("node field \"children\" must be an array");
        }
        for (const auto& child : j["children"]) {
            node.children.push_back(node_from_json(child));
        }
    }
    return node;
}

json node_to_json(const SingularityNode& node) {
    json j;
    j["m"] = node.multiplicity;
    if (!node.children.empty()) {
        j["children"] = json::array();
        for (const auto& child : node.children) {
            j["children"].push_back(node_to_json(child));
        }
    }
    return j;
}

}  // namespace

SingularityForest forest_from_json(const json& j) {
    check_schema(j);
    SingularityForest forest;
    forest.g = get_integer(j, "g");
    if (!j.contains("n") || !j["n"].is_string()) {
        throw ValidationError("missing forest field \"n\" (a rational string)");
    }
    forest.n = parse_rational(j["n"].get<std::string>());
    if (j.contains("s2")) {
        if (!j["s2"].is_number_integer()) {
            throw ValidationError("forest field \"s2\" must be an integer");
        }
        forest.explicit_s2 = j["s2"].get<long>();
    }
    if (j.contains("fibers")) {
        if (!j["fibers"].is_array()) {
            throw ValidationError("forest field \"fibers\" must be an array");
        }
        for (const auto& fj : j["fibers"]) {
            SingularityFiber fiber;
            if (fj.contains("roots")) {
                if (!fj["roots"].is_array()) {
                    throw ValidationError("fiber field \"roots\" must be an array");
                }
                for (const auto& rj : fj["roots"]) {
                    fiber.roots.push_back(node_from_json(rj));
                }
            }
            forest.fibers.push_back(std::move(fiber));
        }
    }
    return forest;
}

json forest_to_json(const SingularityForest& forest) {
    json j;
    j["schema"] = 1;
    j["g"] = forest.g;
    j["n"] = to_string(forest.n);
    if (forest.explicit_s2) j["s2"] = *forest.explicit_s2;
    j["fibers"] = json::array();
    for (const auto& fiber : forest.fibers) {
        json fj;
        fj["roots"] = json::array();
        for (const auto& root : fiber.roots) {
            fj["roots"].push_back(node_to_json(root));
        }
        j["fibers"].push_back(std::move(fj));
    }
    return j;
}

SingularityIndexVector index_vector_from_json(const json& j) {
    check_schema(j);
    const long g = get_integer(j, "g");
    if (g < 2 || g > 1000000) {
        throw ValidationError("genus g = " + std::to_string(g) +
                              " is outside the supported range");
    }
    SingularityIndexVector v = SingularityIndexVector::zero(g);
    if (j.contains("s2")) {
        if (!j["s2"].is_number_integer()) {
            throw ValidationError("field \"s2\" must be an integer");
        }
        v.s2 = j["s2"].get<long>();
    }
    if (j.contains("s")) {
        if (!j["s"].is_object()) {
            throw ValidationError("field \"s\" must map indices to integers");
        }
        for (const auto& [key, value] : j["s"].items()) {
            long index;
            try {
                index = std::stol(key);
            } catch (const std::exception&) {
                throw ValidationError("index key \"" + key + "\" is not an integer");
            }
            if (index < 3 || index > g + 2) {
                throw ValidationError("index s_" + key + " outside 3..g+2 = 3.." +
                                      std::to_string(g + 2));
            }
            if (!value.is_number_integer()) {
                throw ValidationError("s_" + key + " must be an integer");
            }
            v.set(index, value.get<long>());
        }
    }
    validate_index_vector(v);
    return v;
}

json index_vector_to_json(const SingularityIndexVector& v) {
    json j;
    j["schema"] = 1;
    j["g"] = v.g;
    j["s2"] = v.s2;
    json s = json::object();
    for (long i = 3; i <= v.g + 2; ++i) {
        if (v.at(i) != 0) s[std::to_string(i)] = v.at(i);
    }
    j["s"] = std::move(s);
    return j;
}

json rational_vector_to_json(const RationalIndexVector& v) {
    json j = json::object();
    for (long i = 2; i <= v.g + 2; ++i) {
        if (v.at(i) != 0) j["s" + std::to_string(i)] = to_string(v.at(i));
    }
    return j;
}

json invariants_to_json(const RelativeInvariants& inv) {
    return json{{"k2", to_string(inv.k2)},
                {"chi", to_string(inv.chi)},
                {"e", to_string(inv.e)},
                {"integral", inv.integral()}};
}

json coefficients_to_json(const CoefficientSet& set) {
    const auto list = [](const std::vector<std::pair<long, Rational>>& entries) {
        json j = json::object();
        for (const auto& [k, c] : entries) j[std::to_string(k)] = to_string(c);
        return j;
    };
    return json{{"lambda", to_string(set.lambda)}, {"alpha", to_string(set.alpha)},
                {"alpha_k", list(set.alpha_k)},    {"beta_k", list(set.beta_k)},
                {"gamma_k", list(set.gamma_k)},    {"delta_k", list(set.delta_k)}};
}

json certificate_to_json(const std::map<std::string, Rational>& certificate) {
    json j = json::object();
    for (const auto& [id, multiplier] : certificate) j[id] = to_string(multiplier);
    return j;
}

json sharpness_to_json(const SharpnessReport& report) {
    json j;
    j["g"] = report.profile.g;
    j["qf"] = report.profile.qf;
    j["bound"] = to_string(report.bound);
    j["lp_minimum"] = to_string(report.lp_minimum);
    j["equal"] = report.equal;
    j["witness"] = rational_vector_to_json(report.witness);
    j["witness_slope"] = to_string(report.witness_slope);
    j["witness_attains"] = report.witness_attains;
    j["certificate_valid"] = report.certificate_valid;
    return j;
}

json example_to_json(const ExampleReport& report) {
    json j;
    j["g"] = report.g;
    j["qf"] = report.qf;
    j["invariants"] = invariants_to_json(report.invariants);
    j["slope"] = to_string(report.slope);
    j["bound"] = to_string(report.bound);
    j["attains_bound"] = report.attains_bound;
    if (report.index_vector) j["index_vector"] = index_vector_to_json(*report.index_vector);
    if (report.n) j["n"] = to_string(*report.n);
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open input file \"" + path + "\"");
    }
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError("input file \"" + path + "\" is not valid JSON");
    }
    return j;
}

SingularityForest load_forest(const std::string& path) {
    return forest_from_json(parse_file(path));
}

SingularityIndexVector load_index_vector(const std::string& path) {
    return index_vector_from_json(parse_file(path));
}

}  // namespace slopelab::io
