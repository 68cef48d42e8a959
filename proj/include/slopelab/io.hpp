#ifndef SLOPELAB_IO_HPP
#define SLOPELAB_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "slopelab/cone_optimizer.hpp"
#include "slopelab/example_factory.hpp"
#include "slopelab/invariant_core.hpp"
#include "slopelab/resolution_engine.hpp"

namespace slopelab::io {

using nlohmann::json;

// Forest file:
//   { "schema": 1, "g": 3, "n": "2", "s2": 16,
//     "fibers": [ { "roots": [ { "m": 4, "children": [ ... ] } ] } ] }
// "schema" and "s2" are optional; node multiplicities are multiplicities in
// the post-update transform, exceptional curve included after an odd parent.
SingularityForest forest_from_json(const json& j);
json forest_to_json(const SingularityForest& forest);
SingularityForest load_forest(const std::string& path);

// Index-vector file:
//   { "schema": 1, "g": 3, "s2": 16, "s": { "4": 8 } }
// Keys of "s" are the indices 3..g+2; absent indices are zero.
SingularityIndexVector index_vector_from_json(const json& j);
json index_vector_to_json(const SingularityIndexVector& v);
SingularityIndexVector load_index_vector(const std::string& path);

json rational_vector_to_json(const RationalIndexVector& v);
json invariants_to_json(const RelativeInvariants& inv);
json coefficients_to_json(const CoefficientSet& set);
json certificate_to_json(const std::map<std::string, Rational>& certificate);
json sharpness_to_json(const SharpnessReport& report);
json example_to_json(const ExampleReport& report);

json parse_file(const std::string& path);

}  // namespace slopelab::io

#endif
