#ifndef HARNACK_JSON_IO_HPP
#define HARNACK_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "harnack/inequality.hpp"
#include "harnack/matrix.hpp"

namespace harnack {

using json = nlohmann::json;

/// Shared matrix format: { "n": int, "entries": [[ [re, im], ... ], ...] },
/// bare reals accepted as shorthand for [re, 0].
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);
ComplexMatrix matrix_from_file(const std::string& path);

json extended_real_to_json(const ExtendedReal& x);
ExtendedReal extended_real_from_json(const json& j);

json report_to_json(const InequalityReport& rep);
InequalityReport report_from_json(const json& j);

} // namespace harnack

#endif
