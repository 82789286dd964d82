#pragma once

#include <json.hpp>

#include <ostream>

#include "qheun/numerics.hpp"
#include "qheun/qes_models.hpp"
#include "qheun/recurrence_lab.hpp"

namespace qheun {

using json = nlohmann::json;

// JSON forms are canonical: rationals as "num/den" strings, term lists
// sorted by exponent vector. to/from pairs round-trip bit-exactly.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json to_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

json to_json(const LinearOde& ode);
LinearOde ode_from_json(const json& j);

json to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const json& j);

json to_json(const PolySequence& seq);
PolySequence sequence_from_json(const json& j);

json to_json(const RootInterval& iv);
json to_json(const FavardReport& report);
json to_json(const MomentFunctional& L);
json to_json(const GramMatrix& G);
json to_json(const TruncationResult& result);
json to_json(const Spectrum& sp);
json to_json(const QesState& st);

// CSV emission (header row first, exact "num/den" cells for rationals).
void write_sequence_csv(std::ostream& os, const PolySequence& seq);
void write_table_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace qheun
