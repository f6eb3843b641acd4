#pragma once

#include <string>

#include "json.hpp"
#include "nambu/exterior.hpp"

namespace nambu {

using Json = nlohmann::ordered_json;

// {"coords":[names], "grade":k, "terms":[{"idx":[...], "coef":"<poly>"}]}
// Terms come out sorted by index set; coefficients in canonical text form.
Json to_json(const KForm& a);
Json to_json(const KVector& v);

KForm kform_from_json(const Json& j);
KVector kvector_from_json(const Json& j);

/// Compact single-line dump.
std::string dump(const Json& j);

} // namespace nambu
