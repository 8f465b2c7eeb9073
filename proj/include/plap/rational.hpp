#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>

#include "plap/errors.hpp"

namespace plap {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every value is canonicalized on entry;
// arithmetic on canonical operands stays canonical.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Shortest exact form: "0", "1", "-2/5".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Fully explicit "num/den" form used at I/O boundaries: "0/1", "-2/5".
inline std::string rat_frac_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rat_double(const Rat& r) { return r.get_d(); }

// Accepts "a/b" or "a" with optional sign; returns nothing on malformed input.
inline std::optional<Rat> parse_rat(std::string s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!s.empty() && s[0] == '+') s.erase(0, 1);  // a leading plus is ours, not the parser's
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      Rat r{mpz_class(s)};
      return r;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace plap
