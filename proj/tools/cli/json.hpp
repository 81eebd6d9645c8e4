#pragma once

#if defined(BRL_JSON_SINGLE_HEADER)
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

namespace brl::cli {
using json = nlohmann::ordered_json;
}
