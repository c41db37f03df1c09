#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gppl {

namespace mp = boost::multiprecision;

// Arbitrary-precision rational, always reduced, denominator > 0.
using Rat = mp::number<mp::backends::rational_adaptor<mp::backends::cpp_int_backend<>>,
                       mp::et_off>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

// Accepts "3/4", "3", or an exact decimal like "0.25".
Rat parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rat_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exp);

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

inline double rat_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace gppl
