#pragma once

#include "zassen/matrix_example.hpp"
#include "zassen/splitting.hpp"

#include "json.hpp"

namespace zassen {

using json = nlohmann::json;

/// {"kind":"pi","entries":[{"k":1,"l":1,"n":2,"i":1,"value":"-3/4"},...]}
json coeff_table_to_json(const CoeffTable &t);
CoeffTable coeff_table_from_json(const json &j);

/// [{"k":2,"scalar":{"q":"1","i":1,"t":1,"eps":-1},"poly":[{"coeff":"2","mono":[{"sym":"f","d":0,"e":1}]},...]},...]
json fterm_to_json(const FTerm &f);
FTerm fterm_from_json(const json &j);

/// Ordered exponent list with heights, grading, formula strings and the
/// derivative-order manifest.
json splitting_to_json(const Splitting &sp);
Splitting splitting_from_json(const json &j);

json magnus_to_json(const std::vector<MagnusTerm> &terms);

} // namespace zassen
