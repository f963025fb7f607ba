// Deterministic CSV formatting: "." decimal point, no locale, stable digit
// count, so reruns with the same seed produce byte-identical files.
#pragma once

#include <cstdio>
#include <string>

namespace icr {

inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string csv_number(long v) { return std::to_string(v); }
inline std::string csv_number(int v) { return std::to_string(v); }

}  // namespace icr
