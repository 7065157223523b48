#include "nsys/extrat.hpp"

#include <stdexcept>

namespace nsys {

const Rat& ExtRat::finite() const {
  if (is_infinite()) throw std::domain_error("ExtRat: value is infinite");
  return *finite_;
}

std::string ExtRat::str() const {
  return is_infinite() ? "inf" : rat_str(*finite_);
}

std::optional<ExtRat> ExtRat::try_parse(const std::string& text) {
  if (text == "inf") return ExtRat::infinity();
  auto r = try_parse_rat(text);
  if (!r) return std::nullopt;
  return ExtRat(*r);
}

}  // namespace nsys
