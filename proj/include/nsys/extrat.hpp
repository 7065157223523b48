#pragma once

#include <compare>
#include <optional>
#include <string>

#include "nsys/rational.hpp"

namespace nsys {

// Rational extended with +infinity. Only the comparisons and the handful of
// guarded expressions the exponent formulas need are provided; general
// arithmetic on infinities is deliberately not.
class ExtRat {
 public:
  ExtRat() : finite_(0) {}
  ExtRat(Rat value) : finite_(std::move(value)) {}  // NOLINT: implicit by design
  static ExtRat infinity() {
    ExtRat e;
    e.finite_.reset();
    return e;
  }

  bool is_infinite() const { return !finite_.has_value(); }
  const Rat& finite() const;  // throws on infinity

  bool operator==(const ExtRat& o) const {
    return finite_ == o.finite_;
  }
  bool operator<(const ExtRat& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return *finite_ < *o.finite_;
  }
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
  bool operator>(const ExtRat& o) const { return o < *this; }
  bool operator>=(const ExtRat& o) const { return o <= *this; }

  std::string str() const;

  // Parses rat_str output plus the token "inf".
  static std::optional<ExtRat> try_parse(const std::string& text);

 private:
  std::optional<Rat> finite_;  // empty means +infinity
};

}  // namespace nsys
