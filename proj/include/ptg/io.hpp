#pragma once

#include <string>
#include <string_view>

#include "ptg/cosimplicial.hpp"
#include "ptg/ptolemy.hpp"
#include "ptg/quantization.hpp"

namespace ptg {

// Symbols as "[target|source|perm]" or JSON {"target", "source", "perm"};
// braid coefficients as "[target|source|s1 s2^-1]" or JSON with "braid".
// "alpha", "beta" and "id" name the standard elements of T.
VSymbol parse_element(std::string_view text);
BVSymbol parse_bv_element(std::string_view text);

std::string format_element(const VSymbol& s);
std::string format_element(const BVSymbol& s);
std::string element_json(const VSymbol& s);
std::string element_json(const BVSymbol& s);

std::string tessellation_json(const MarkedTessellation& t);
MarkedTessellation parse_tessellation_json(std::string_view text);

std::string seed_json(const Seed& s);
Seed parse_seed_json(std::string_view text);

}  // namespace ptg
