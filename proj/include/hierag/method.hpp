#pragma once

#include <string>
#include <string_view>

#include "hierag/error.hpp"

namespace hierag {

// Indexing method: raw chunked content vs distilled knowledge docs.
enum class Method { Baseline, Implicit };

inline const char* method_name(Method m) {
    return m == Method::Baseline ? "baseline" : "implicit";
}

// Display label used in report tables.
inline const char* method_label(Method m) {
    return m == Method::Baseline ? "Baseline" : "Proposed";
}

inline Method parse_method(std::string_view s) {
    if (s == "baseline") return Method::Baseline;
    if (s == "implicit") return Method::Implicit;
    throw Error(Errc::ArgError, "unknown method: " + std::string(s));
}

} // namespace hierag
