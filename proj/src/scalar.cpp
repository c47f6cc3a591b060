#include "indicatrix/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace indicatrix {

namespace {

std::size_t scan_integer(std::string_view text, std::size_t pos, bool allow_sign,
                         std::size_t offset) {
  std::size_t i = pos;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t digits = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits) throw ParseError("expected digits", offset + i);
  return i;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t offset) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  std::size_t trail = text.size();
  while (trail > lead && std::isspace(static_cast<unsigned char>(text[trail - 1]))) --trail;
  text = text.substr(0, trail);
  if (lead == text.size()) throw ParseError("empty rational", offset + lead);

  const std::size_t num_end = scan_integer(text, lead, true, offset);
  std::string num(text.substr(lead, num_end - lead));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (num_end == text.size()) return Rational(Integer(num));
  if (text[num_end] != '/') throw ParseError("unexpected character in rational", offset + num_end);
  const std::size_t den_end = scan_integer(text, num_end + 1, false, offset);
  if (den_end != text.size()) throw ParseError("trailing characters in rational", offset + den_end);
  Integer den(std::string(text.substr(num_end + 1)));
  if (den == 0) throw ParseError("zero denominator", offset + num_end + 1);
  return Rational(Integer(num), den);
}

std::string format_rational(const Rational& r) { return r.str(); }

std::string format_real(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

Rational dyadic_approximation(double x, int bits) {
  Integer scale = Integer(1) << bits;
  const double scaled = std::round(std::ldexp(x, bits));
  Integer n(scaled);
  return Rational(n, scale);
}

}  // namespace indicatrix
