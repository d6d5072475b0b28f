#include "tiltkit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tiltkit {

LaurentPoly LaurentPoly::monomial(Int coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::span<const Int> c) {
  LaurentPoly p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
  return p;
}

void LaurentPoly::add_term(int e, Int c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Int LaurentPoly::coefficient(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
  if (c_.empty()) throw std::logic_error("min_degree of the zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (c_.empty()) throw std::logic_error("max_degree of the zero polynomial");
  return c_.rbegin()->first;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : c_)
    if (c < 0) return false;
  return true;
}

std::vector<Int> LaurentPoly::coefficients() const {
  if (c_.empty()) return {};
  if (min_degree() < 0) throw std::logic_error("coefficients(): polynomial has negative exponents");
  std::vector<Int> out(static_cast<std::size_t>(max_degree()) + 1, 0);
  for (const auto& [e, c] : c_) out[e] = c;
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_.emplace(-e, c);
  return p;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
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
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_.emplace(e, -c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_.emplace(e + k, c);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Int mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace tiltkit
