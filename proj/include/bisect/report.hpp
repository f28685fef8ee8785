// Bound reports shared by the algorithms and the command line.
#pragma once

#include <string>

#include "bisect/graph.hpp"
#include "bisect/rational.hpp"
#include "json.hpp"

namespace bisect {

using Json = nlohmann::json;

enum class Sense { at_least, at_most };

struct BoundReport {
    std::string theorem;
    Json params = Json::object();
    Rational bound{0};
    bool exact = true;        // false when bound_value is irrational
    double bound_value = 0;   // used when !exact
    long long achieved = 0;
    Sense sense = Sense::at_least;
    bool satisfied = false;

    double bound_as_double() const { return exact ? to_double(bound) : bound_value; }
    /// Recomputes `satisfied` from bound and achieved.
    void settle();
};

Json to_json(const BoundReport& r);
Json to_json(const CutStats& s);
Json to_json(const Bipartition& p);

}  // namespace bisect
