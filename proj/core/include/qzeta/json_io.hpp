#pragma once

#include <string>

#include "qzeta/denominator.hpp"
#include "qzeta/linear_form.hpp"
#include "qzeta/rat_func.hpp"

namespace qzeta {

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.  Used to digest
// large exact witnesses into report-sized strings.
std::string fnv1a64_hex(const std::string& bytes);

// Exact JSON encodings.  Coefficients are decimal strings, polynomials are
// exponent -> coefficient objects, so round-trips are lossless and the
// output is byte-stable across runs.
std::string to_json_string(const RatFunc& f);
std::string to_json_string(const LinearForm& form);
std::string to_json_string(const DenominatorReport& report);

RatFunc rat_func_from_json(const std::string& text);
LinearForm linear_form_from_json(const std::string& text);

}  // namespace qzeta
