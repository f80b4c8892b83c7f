#pragma once

#include "json.hpp"

namespace wang {

// Construction metadata carried by tilesets and compiled artifacts.
// Field order is preserved so serialized output is stable byte-for-byte.
using Meta = nlohmann::ordered_json;

}  // namespace wang
