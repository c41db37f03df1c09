#include "gppl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gppl {

namespace {

mp::cpp_int parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad digit in rational literal: " + s);
  return mp::cpp_int(s);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mp::cpp_int num = parse_integer(text.substr(0, slash));
    mp::cpp_int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("trailing dot in rational literal: " + text);
    bool neg = !whole.empty() && whole[0] == '-';
    mp::cpp_int w = whole.empty() || whole == "-" || whole == "+"
                        ? mp::cpp_int(0)
                        : parse_integer(whole);
    mp::cpp_int f = parse_integer(frac);
    mp::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mp::cpp_int num = abs(w) * scale + f;
    if (neg) num = -num;
    return Rat(num, scale);
  }
  return Rat(parse_integer(text), 1);
}

std::string rat_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat acc(1);
  Rat b = base;
  while (exp > 0) {
    if (exp & 1u) acc *= b;
    b *= b;
    exp >>= 1u;
  }
  return acc;
}

}  // namespace gppl
