#include "phax/value.hpp"

#include <charconv>
#include <stdexcept>

namespace phax {

std::string FiltValue::str() const {
  if (inf_) return "inf";
  std::string s = std::to_string(q_.numerator());
  if (q_.denominator() != 1) s += "/" + std::to_string(q_.denominator());
  return s;
}

namespace {

std::int64_t parse_int(const std::string& text, std::size_t b, std::size_t e) {
  std::int64_t out = 0;
  const char* first = text.data() + b;
  const char* last = text.data() + e;
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("malformed value '" + text + "'");
  return out;
}

} // namespace

FiltValue FiltValue::parse(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "+inf") return inf();
  auto slash = text.find('/');
  if (slash == std::string::npos) return FiltValue(parse_int(text, 0, text.size()));
  std::int64_t n = parse_int(text, 0, slash);
  std::int64_t d = parse_int(text, slash + 1, text.size());
  if (d <= 0) throw std::invalid_argument("malformed value '" + text + "'");
  return FiltValue(n, d);
}

std::ostream& operator<<(std::ostream& os, const FiltValue& v) { return os << v.str(); }

} // namespace phax
