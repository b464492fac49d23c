// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <charconv>
#include <string>

namespace vanetstat {

//! Shortest decimal text that round-trips to the same double.
inline std::string format_double(double value)
{
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

}  // namespace vanetstat
