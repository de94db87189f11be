#include "grain/frac.hpp"

#include <cctype>
#include <cstdlib>

namespace grain {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(std::string("rational overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Frac::Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
}

Frac Frac::operator+(const Frac& o) const {
  i128 n = i128(num) * o.den + i128(o.num) * den;
  i128 d = i128(den) * o.den;
  return Frac(checked_narrow(n, "add"), checked_narrow(d, "add"));
}

Frac Frac::operator-(const Frac& o) const {
  i128 n = i128(num) * o.den - i128(o.num) * den;
  i128 d = i128(den) * o.den;
  return Frac(checked_narrow(n, "sub"), checked_narrow(d, "sub"));
}

Frac Frac::operator*(const Frac& o) const {
  // Cross-reduce before multiplying to keep intermediates small.
  std::int64_t a = num, b = den, c = o.num, d = o.den;
  std::int64_t g1 = std::gcd(a < 0 ? -a : a, d);
  if (g1 > 1) { a /= g1; d /= g1; }
  std::int64_t g2 = std::gcd(c < 0 ? -c : c, b);
  if (g2 > 1) { c /= g2; b /= g2; }
  i128 n = i128(a) * c;
  i128 dd = i128(b) * d;
  return Frac(checked_narrow(n, "mul"), checked_narrow(dd, "mul"));
}

Frac Frac::operator/(const Frac& o) const {
  if (o.num == 0) throw Error("rational division by zero");
  return *this * Frac(o.den, o.num);
}

int Frac::cmp(const Frac& o) const {
  i128 l = i128(num) * o.den;
  i128 r = i128(o.num) * den;
  if (l < r) return -1;
  if (l > r) return 1;
  return 0;
}

std::optional<Frac> Frac::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!is_int(a) || !is_int(b)) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    long long n = std::strtoll(a.c_str(), &end, 10);
    long long d = std::strtoll(b.c_str(), &end, 10);
    if (errno == ERANGE || d == 0) return std::nullopt;
    return Frac(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string a = text.substr(0, dot), b = text.substr(dot + 1);
    if (a.empty() || a == "-" || a == "+") a += "0";
    if (!is_int(a) || b.empty()) return std::nullopt;
    for (char ch : b)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    if (b.size() > 18) return std::nullopt;
    errno = 0;
    long long ip = std::strtoll(a.c_str(), nullptr, 10);
    long long fp = b.empty() ? 0 : std::strtoll(b.c_str(), nullptr, 10);
    if (errno == ERANGE) return std::nullopt;
    i128 den = 1;
    for (std::size_t i = 0; i < b.size(); ++i) den *= 10;
    if (den > INT64_MAX) return std::nullopt;
    bool neg = !text.empty() && text[0] == '-';
    i128 n = i128(ip < 0 ? -ip : ip) * den + fp;
    if (neg || ip < 0) n = -n;
    if (n > INT64_MAX || n < INT64_MIN) return std::nullopt;
    return Frac(static_cast<std::int64_t>(n), static_cast<std::int64_t>(den));
  }
  if (!is_int(text)) return std::nullopt;
  errno = 0;
  long long n = std::strtoll(text.c_str(), nullptr, 10);
  if (errno == ERANGE) return std::nullopt;
  return Frac(n, 1);
}

std::string Frac::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace grain
