#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hyct {

/// FNV-1a 64-bit hash; used to fingerprint system definitions in study
/// metadata so reruns of an identical configuration are recognisable.
std::uint64_t fnv1a64(std::string_view text);

std::string to_hex(std::uint64_t value);

}  // namespace hyct
