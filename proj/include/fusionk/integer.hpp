#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fusionk {

// Exact arbitrary-precision integer. Multiplicities in tensor powers grow
// exponentially and the Smith normal form must stay exact, so no fixed-width
// type is acceptable anywhere in the pipeline.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& n) { return n.str(); }

// Parses a decimal string (optional leading '-'). Throws std::invalid_argument
// on anything else; fusion-table documents serialize all multiplicities this way.
inline Integer parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    return Integer(s);
}

}  // namespace fusionk
