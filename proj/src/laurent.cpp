#include "qhopf/laurent.hpp"

#include <limits>

#include <sstream>
#include <stdexcept>

namespace qhopf {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int e, const Int& c) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = c;
  return p;
}

Int LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [e1, c1] : a.c_)
    for (const auto& [e2, c2] : b.c_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

Int LaurentPoly::eval(int q0) const {
  if (q0 != 1 && q0 != -1)
    throw std::invalid_argument("LaurentPoly::eval: only q = 1 or q = -1 supported");
  Int s = 0;
  for (const auto& [e, c] : c_) {
    if (q0 == -1 && (e % 2 != 0)) s -= c;
    else s += c;
  }
  return s;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : c_) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j[std::to_string(e)] = static_cast<long long>(c);
    else
      j[std::to_string(e)] = c.str();
  }
  return j;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative n");
  LaurentPoly r;
  for (int i = 0; i < n; ++i) r += LaurentPoly::monomial(i);
  return r;
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  LaurentPoly r = 1;
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

long long to_odd(const LaurentPoly& p) { return static_cast<long long>(p.eval(-1)); }

std::string coeff_to_string(const LaurentPoly& c) { return c.to_string(); }
std::string coeff_to_string(long long c) { return std::to_string(c); }

}  // namespace qhopf
