#ifndef PICARDCM_JSON_IO_HPP
#define PICARDCM_JSON_IO_HPP

#include <json.hpp>

#include "picardcm/bound_engine.hpp"
#include "picardcm/lattice_search.hpp"
#include "picardcm/picard_invariants.hpp"

namespace picardcm {

using Json = nlohmann::ordered_json;

// All rationals cross the JSON boundary as "p/q" strings.

Json factored_to_json(const FactoredNumber& f);
FactoredNumber factored_from_json(const Json& j);

PicardCurve curve_from_json(const Json& j);
Json curve_to_json(const PicardCurve& cu);

std::vector<std::pair<Rational, Rational>> points_from_json(const Json& j);

Json invariants_to_json(const InvariantVector& v);
Json denominators_to_json(const AbsoluteDenominators& d);
Json certificate_to_json(const BoundCertificate& cert);
Json verdict_to_json(const ReductionVerdict& r);
Json classpoly_to_json(const ClassPolyPair& cp);
Json report_to_json(const VerifyReport& rep);
Json candidates_to_json(const std::vector<MuCandidate>& cands);

}  // namespace picardcm

#endif
