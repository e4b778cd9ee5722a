/*******************************************************************************
 * @file:   resources.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>

namespace streamep {

// Maximum resident set size of this process so far.
std::optional<std::uint64_t> peak_rss_bytes();

} // namespace streamep
