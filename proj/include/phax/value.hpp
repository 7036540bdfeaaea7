#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <string>

namespace phax {

using Rational = boost::rational<std::int64_t>;

// Filtration value: an exact rational or INF (absent from every finite level).
class FiltValue {
public:
  FiltValue() = default;
  FiltValue(std::int64_t n) : q_(n) {}
  FiltValue(std::int64_t n, std::int64_t d) : q_(n, d) {}
  FiltValue(Rational q) : q_(q) {}

  static FiltValue inf() {
    FiltValue v;
    v.inf_ = true;
    return v;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  // Precondition: finite.
  const Rational& rational() const { return q_; }

  friend bool operator==(const FiltValue& a, const FiltValue& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.q_ == b.q_;
  }
  friend bool operator<(const FiltValue& a, const FiltValue& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.q_ < b.q_;
  }
  friend bool operator!=(const FiltValue& a, const FiltValue& b) { return !(a == b); }
  friend bool operator>(const FiltValue& a, const FiltValue& b) { return b < a; }
  friend bool operator<=(const FiltValue& a, const FiltValue& b) { return !(b < a); }
  friend bool operator>=(const FiltValue& a, const FiltValue& b) { return !(a < b); }

  // "n", "n/d" or "inf".
  std::string str() const;
  // Throws std::invalid_argument on malformed text.
  static FiltValue parse(const std::string& text);

private:
  Rational q_{0};
  bool inf_ = false;
};

inline const FiltValue& min(const FiltValue& a, const FiltValue& b) { return b < a ? b : a; }
inline const FiltValue& max(const FiltValue& a, const FiltValue& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const FiltValue& v);

} // namespace phax
