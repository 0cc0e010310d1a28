#pragma once

#include <json.hpp>

#include "okubo/connection.hpp"
#include "okubo/katz.hpp"
#include "okubo/monodromy.hpp"
#include "okubo/system.hpp"

namespace okubo {

using Json = nlohmann::json;

// complex numbers serialize as [re, im]; matrices as nested row-major arrays

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);

Json to_json(const OkuboSystem& system);
OkuboSystem system_from_json(const Json& j);

Json to_json(const ExponentChart& chart);
ExponentChart chart_from_json(const Json& j);

Json to_json(const ConnectionTable& table);

Json to_json(const MonodromyTuple& tuple);

Json to_json(const KatzStep& step);
KatzStep katz_step_from_json(const Json& j);

}  // namespace okubo
