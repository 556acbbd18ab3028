#ifndef XP_VENDOR_JSON_FWD_HPP
#define XP_VENDOR_JSON_FWD_HPP

// Single include point for the vendored nlohmann/json header.
#include "json.hpp"

#endif
