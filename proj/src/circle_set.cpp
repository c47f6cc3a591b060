#include "indicatrix/circle_set.hpp"

#include <cctype>

namespace indicatrix {

CircleOpenSet parse_circle_set(std::string_view text) {
  std::vector<Arc> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    bool blank = true;
    for (char c : item) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (blank) {
      if (comma != text.size() || !raw.empty())
        throw ParseError("empty arc literal", pos);
      break;
    }
    const std::size_t plus = item.find('+', item.find_first_not_of(" \t+-") );
    if (plus == std::string_view::npos) throw ParseError("expected start+length", pos);
    Rational start = parse_rational(item.substr(0, plus), pos);
    Rational length = parse_rational(item.substr(plus + 1), pos + plus + 1);
    if (start < 0 || !(start < 1)) throw ParseError("arc start must lie in [0,1)", pos);
    if (length <= 0 || length > 1) throw ParseError("arc length must lie in (0,1]", pos + plus + 1);
    raw.push_back({std::move(start), std::move(length)});
    pos = comma + 1;
  }
  return CircleOpenSet::normalize(std::move(raw));
}

std::string format_circle_set(const CircleOpenSet& set) {
  std::string out;
  for (const auto& a : set.arcs()) {
    if (!out.empty()) out += ", ";
    out += format_rational(a.start) + "+" + format_rational(a.length);
  }
  return out;
}

}  // namespace indicatrix
