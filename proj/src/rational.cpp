#include "stabkit/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace stabkit {

std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += "/";
    s += std::to_string(r.denominator());
  }
  return s;
}

namespace {

long long parse_ll(const std::string& s) {
  if (s.empty()) throw domain_error("empty integer in rational literal");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw domain_error("bad rational literal: " + s);
  }
  if (pos != s.size()) throw domain_error("bad rational literal: " + s);
  return v;
}

}  // namespace

Rat rat_from_string(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw domain_error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long num = parse_ll(s.substr(0, slash));
    long long den = parse_ll(s.substr(slash + 1));
    if (den == 0) throw domain_error("zero denominator: " + raw);
    return Rat(num, den);
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(parse_ll(s), 1);

  // Finite decimal: mantissa / 10^k, exact.
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool neg = !head.empty() && head[0] == '-';
  if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
  if (head.empty()) head = "0";
  long long den = 1;
  for (char c : tail) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw domain_error("bad rational literal: " + raw);
    if (den > 900'000'000'000'000'000LL / 10)
      throw domain_error("decimal literal too long: " + raw);
    den *= 10;
  }
  long long num = parse_ll(head) * den + (tail.empty() ? 0 : parse_ll(tail));
  if (neg) num = -num;
  return Rat(num, den);
}

}  // namespace stabkit
