#pragma once

#include <istream>
#include <optional>

#include <json.hpp>

#include "quivmod/catalog.hpp"
#include "quivmod/deform.hpp"
#include "quivmod/laurent.hpp"
#include "quivmod/ratfunc.hpp"
#include "quivmod/strata.hpp"

namespace quivmod {

using Json = nlohmann::json;

/// A problem read from an input document or built from the catalog.
struct ProblemSpec {
    Quiver quiver;
    DimVector d;
    Stability theta;
    std::optional<Stability> theta_prime;
    bool assume_nonempty = false;
};

/// Parses {"vertices", "arrows", "dimension", "stability", "deformed_stability"?,
/// "assume_nonempty"?}; throws InvalidInput.
ProblemSpec parse_problem(const Json& doc);
ProblemSpec parse_problem(std::istream& in);
ProblemSpec problem_from_example(const Example& ex);
Json problem_to_json(const ProblemSpec& spec);

/// {"v_powers": {power: "p/q"}, "pretty": "..."}.
Json to_json(const HalfLaurent& p);
HalfLaurent laurent_from_json(const Json& j);
/// {"num": ..., "den": ..., "pretty": "..."}.
Json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const Json& j);

Json to_json(const DimVector& d);
Json to_json(const Stability& s);
Json to_json(const Quiver& q);
Json to_json(const HalfInt& h);
Json to_json(const LunaType& xi);
Json to_json(const LocalQuiver& lq);
Json to_json(const DeformationCheck& c);
Json to_json(const SmallnessReport& r);

}  // namespace quivmod
