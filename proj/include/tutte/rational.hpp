#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "tutte/error.hpp"

namespace tutte {

/// Exact rational number backed by GMP's mpq_class.
///
/// Values are kept canonical at all times: the fraction is reduced and the
/// denominator is positive, so zero is always 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                          // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                         // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(unsigned long v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& v) : q_(v) {}             // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Parses "p/q", "p", with an optional leading sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& str) {
      auto b = str.find_first_not_of(" \t\n\r");
      auto e = str.find_last_not_of(" \t\n\r");
      str = b == std::string::npos ? std::string() : str.substr(b, e - b + 1);
    };
    trim(s);
    auto valid_int = [](const std::string& str) {
      if (str.empty()) return false;
      std::size_t i = (str[0] == '-' || str[0] == '+') ? 1 : 0;
      if (i == str.size()) return false;
      for (; i < str.size(); ++i)
        if (str[i] < '0' || str[i] > '9') return false;
      return true;
    };
    auto to_mpz = [](std::string str) {
      if (!str.empty() && str[0] == '+') str.erase(0, 1);
      return mpz_class(str, 10);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
      return Rational(to_mpz(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
    return Rational(to_mpz(num), to_mpz(den));
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

/// Integer power; negative exponents invert (and throw on a zero base).
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1);
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace tutte

template <>
struct std::hash<tutte::Rational> {
  std::size_t operator()(const tutte::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
