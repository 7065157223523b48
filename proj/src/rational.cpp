#include "nsys/rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nsys {

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> try_parse_rat(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits_only(num) || !digits_only(den)) return std::nullopt;
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

Rat parse_rat(const std::string& text) {
  auto r = try_parse_rat(text);
  if (!r) throw std::invalid_argument("not a rational: '" + text + "'");
  return *r;
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rat_decimal(const Rat& x, int significant_digits) {
  mpf_class f(x, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, significant_digits);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  if (digits.empty()) digits = "0";
  // mpf_get_str yields 0.<digits> * 10^exp; rebuild a plain decimal string.
  std::ostringstream out;
  if (neg) out << '-';
  if (exp <= 0) {
    out << "0.";
    for (mp_exp_t i = 0; i < -exp; ++i) out << '0';
    out << digits;
  } else if (static_cast<std::size_t>(exp) >= digits.size()) {
    out << digits;
    for (std::size_t i = digits.size(); i < static_cast<std::size_t>(exp); ++i) out << '0';
  } else {
    out << digits.substr(0, exp) << '.' << digits.substr(exp);
  }
  return out.str();
}

double rat_double(const Rat& x) { return x.get_d(); }

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<std::vector<Rat>> try_parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto r = try_parse_rat(item);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace nsys
