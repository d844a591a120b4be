#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include <map>
#include <ostream>
#include <string>

namespace qhopf {

using Int = boost::multiprecision::cpp_int;

// Element of Z[q, q^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Int& c);  // NOLINT

  static LaurentPoly monomial(int e, const Int& c = 1);
  static LaurentPoly q() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  Int coeff(int e) const;
  const std::map<int, Int>& terms() const { return c_; }
  int min_exp() const;
  int max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // q0 must be +1 or -1.
  Int eval(int q0) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void add_term(int e, const Int& c);
  std::map<int, Int> c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly q_int(int n);
LaurentPoly q_factorial(int n);

// Coefficient-ring helpers. `long long` stands for Z with q already set to -1.
template <class C>
C qpow(int e);
template <>
inline LaurentPoly qpow<LaurentPoly>(int e) { return LaurentPoly::monomial(e); }
template <>
inline long long qpow<long long>(int e) { return (e % 2 == 0) ? 1 : -1; }

inline bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline bool is_zero(long long c) { return c == 0; }

inline long long sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

long long to_odd(const LaurentPoly& p);  // eval at q = -1, must fit in 64 bits

std::string coeff_to_string(const LaurentPoly& c);
std::string coeff_to_string(long long c);

}  // namespace qhopf
