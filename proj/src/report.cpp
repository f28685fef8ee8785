#include "bisect/report.hpp"

namespace bisect {

void BoundReport::settle() {
    if (exact) {
        Rational a(achieved);
        satisfied = sense == Sense::at_least ? a >= bound : a <= bound;
    } else {
        double a = static_cast<double>(achieved);
        satisfied = sense == Sense::at_least ? a >= bound_value : a <= bound_value;
    }
}

Json to_json(const BoundReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["params"] = r.params;
    j["bound"] = r.bound_as_double();
    if (r.exact) j["bound_exact"] = to_string(r.bound);
    j["achieved"] = r.achieved;
    j["sense"] = r.sense == Sense::at_least ? "at_least" : "at_most";
    j["satisfied"] = r.satisfied;
    return j;
}

Json to_json(const CutStats& s) {
    return Json{{"crossing", s.crossing},
                {"inside1", s.inside1},
                {"inside2", s.inside2},
                {"size1", s.size1},
                {"size2", s.size2}};
}

Json to_json(const Bipartition& p) {
    Json arr = Json::array();
    for (Side s : p.side) arr.push_back(static_cast<int>(s));
    return arr;
}

}  // namespace bisect
