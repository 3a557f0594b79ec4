/*
  This is laurent.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_LAURENT_H
#define IVH_LAURENT_H

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ivhecke/error.h"

namespace ivh {

using Int = boost::multiprecision::cpp_int;

/*
  GF2 is the two-element field, used by the mod-2 model. It provides just
  enough of a ring interface for LaurentT to instantiate over it.
*/
struct GF2 {
  std::uint8_t d_bit = 0;

  GF2() = default;
  GF2(int n) : d_bit(static_cast<std::uint8_t>(n & 1)) {}

  GF2 operator+(GF2 o) const { return GF2(d_bit ^ o.d_bit); }
  GF2 operator-(GF2 o) const { return GF2(d_bit ^ o.d_bit); }
  GF2 operator*(GF2 o) const { return GF2(d_bit & o.d_bit); }
  GF2 operator-() const { return *this; }
  GF2& operator+=(GF2 o) { d_bit ^= o.d_bit; return *this; }
  GF2& operator-=(GF2 o) { d_bit ^= o.d_bit; return *this; }
  GF2& operator*=(GF2 o) { d_bit &= o.d_bit; return *this; }
  bool operator==(GF2 o) const { return d_bit == o.d_bit; }
  bool operator!=(GF2 o) const { return d_bit != o.d_bit; }
  bool isZero() const { return d_bit == 0; }
};

inline bool coeffIsZero(const Int& c) { return c == 0; }
inline bool coeffIsZero(GF2 c) { return c.isZero(); }
inline std::string coeffToString(const Int& c) { return c.str(); }
inline std::string coeffToString(GF2 c) { return c.isZero() ? "0" : "1"; }
inline bool coeffIsNegative(const Int& c) { return c < 0; }
inline bool coeffIsNegative(GF2) { return false; }

/*
  LaurentT<C> is a dense Laurent polynomial in the indeterminate v with
  coefficients in C. d_coeffs[i] is the coefficient of v^{d_off+i}; the
  vector is empty exactly for the zero polynomial and otherwise has nonzero
  first and last entries. The square u = v^2 is a naming convention on even
  exponents, not a second variable.
*/
template <class C>
class LaurentT {
public:
  LaurentT() = default;

  static LaurentT zero() { return LaurentT(); }

  static LaurentT constant(C c) {
    LaurentT p;
    if (!coeffIsZero(c))
      p.d_coeffs.push_back(c);
    return p;
  }

  static LaurentT one() { return constant(C(1)); }

  // c.v^e
  static LaurentT term(C c, int e) {
    LaurentT p = constant(c);
    p.d_off = p.isZero() ? 0 : e;
    return p;
  }

  static LaurentT vPow(int e) { return term(C(1), e); }
  static LaurentT uPow(int e) { return term(C(1), 2 * e); }

  bool isZero() const { return d_coeffs.empty(); }

  int minExp() const {
    requireNonzero("minExp");
    return d_off;
  }

  int maxExp() const {
    requireNonzero("maxExp");
    return d_off + static_cast<int>(d_coeffs.size()) - 1;
  }

  C coeff(int e) const {
    if (isZero() || e < d_off || e > maxExp())
      return C(0);
    return d_coeffs[static_cast<std::size_t>(e - d_off)];
  }

  bool operator==(const LaurentT& o) const {
    return d_off == o.d_off && d_coeffs == o.d_coeffs;
  }
  bool operator!=(const LaurentT& o) const { return !(*this == o); }

  LaurentT operator+(const LaurentT& o) const {
    if (isZero()) return o;
    if (o.isZero()) return *this;
    int lo = std::min(d_off, o.d_off);
    int hi = std::max(maxExp(), o.maxExp());
    LaurentT r;
    r.d_off = lo;
    r.d_coeffs.assign(static_cast<std::size_t>(hi - lo + 1), C(0));
    for (std::size_t i = 0; i < d_coeffs.size(); ++i)
      r.d_coeffs[static_cast<std::size_t>(d_off - lo) + i] += d_coeffs[i];
    for (std::size_t i = 0; i < o.d_coeffs.size(); ++i)
      r.d_coeffs[static_cast<std::size_t>(o.d_off - lo) + i] += o.d_coeffs[i];
    r.normalize();
    return r;
  }

  LaurentT operator-() const {
    LaurentT r = *this;
    for (auto& c : r.d_coeffs)
      c = -c;
    return r;
  }

  LaurentT operator-(const LaurentT& o) const { return *this + (-o); }

  LaurentT operator*(const LaurentT& o) const {
    if (isZero() || o.isZero())
      return LaurentT();
    LaurentT r;
    r.d_off = d_off + o.d_off;
    r.d_coeffs.assign(d_coeffs.size() + o.d_coeffs.size() - 1, C(0));
    for (std::size_t i = 0; i < d_coeffs.size(); ++i)
      for (std::size_t j = 0; j < o.d_coeffs.size(); ++j)
        r.d_coeffs[i + j] += d_coeffs[i] * o.d_coeffs[j];
    r.normalize();
    return r;
  }

  LaurentT& operator+=(const LaurentT& o) { return *this = *this + o; }
  LaurentT& operator-=(const LaurentT& o) { return *this = *this - o; }
  LaurentT& operator*=(const LaurentT& o) { return *this = *this * o; }

  // the bar involution v -> v^{-1}
  LaurentT bar() const {
    if (isZero())
      return LaurentT();
    LaurentT r;
    r.d_coeffs.assign(d_coeffs.rbegin(), d_coeffs.rend());
    r.d_off = -maxExp();
    return r;
  }

  // multiplication by v^k
  LaurentT shifted(int k) const {
    if (isZero())
      return LaurentT();
    LaurentT r = *this;
    r.d_off += k;
    return r;
  }

  // the part supported on strictly negative exponents
  LaurentT negPart() const {
    LaurentT r;
    if (isZero() || d_off >= 0)
      return r;
    int hi = std::min(maxExp(), -1);
    r.d_off = d_off;
    r.d_coeffs.assign(d_coeffs.begin(),
                      d_coeffs.begin() + (hi - d_off + 1));
    r.normalize();
    return r;
  }

  // substitution u -> -u on even-exponent polynomials: v^{2k} -> (-1)^k v^{2k}
  LaurentT substituteMinusU() const {
    if (isZero())
      return LaurentT();
    LaurentT r = *this;
    for (int e = r.minExp(); e <= r.maxExp(); ++e) {
      std::size_t i = static_cast<std::size_t>(e - r.d_off);
      if (coeffIsZero(r.d_coeffs[i]))
        continue;
      if (e % 2 != 0)
        throw DomainError("substituteMinusU: odd exponent present");
      if (((e / 2) % 2 + 2) % 2 == 1)
        r.d_coeffs[i] = -r.d_coeffs[i];
    }
    return r;
  }

  // substitution v -> v^2 (so u -> u^2 on even supports)
  LaurentT stretched() const {
    if (isZero())
      return LaurentT();
    LaurentT r;
    r.d_off = 2 * d_off;
    r.d_coeffs.assign(2 * d_coeffs.size() - 1, C(0));
    for (std::size_t i = 0; i < d_coeffs.size(); ++i)
      r.d_coeffs[2 * i] = d_coeffs[i];
    return r;
  }

  // value at v = 1 (equivalently u = 1)
  C evalOne() const {
    C s(0);
    for (const auto& c : d_coeffs)
      s += c;
    return s;
  }

  bool isUPolynomial() const {
    if (isZero())
      return true;
    if (d_off < 0)
      return false;
    for (int e = d_off; e <= maxExp(); ++e)
      if (!coeffIsZero(coeff(e)) && e % 2 != 0)
        return false;
    return true;
  }

  // exact division; the divisor's leading coefficient must be a unit
  LaurentT exactDiv(const LaurentT& den) const {
    LaurentT q;
    if (!tryExactDiv(den, q))
      throw InternalError("exactDiv: division is not exact");
    return q;
  }

  bool tryExactDiv(const LaurentT& den, LaurentT& quot) const {
    if (den.isZero())
      throw DomainError("tryExactDiv: zero divisor");
    if (isZero()) {
      quot = LaurentT();
      return true;
    }
    C lead = den.d_coeffs.back();
    if (!coeffIsUnit(lead))
      throw DomainError("tryExactDiv: divisor leading coefficient not a unit");
    LaurentT rem = *this;
    LaurentT q;
    while (!rem.isZero() && rem.maxExp() - rem.minExp() + 1 > 0) {
      if (rem.maxExp() - den.maxExp() < rem.minExp() - den.minExp())
        return false;  // degree spread too small to continue exactly
      C c = rem.d_coeffs.back();
      C factor = coeffDivUnit(c, lead);
      int shift = rem.maxExp() - den.maxExp();
      LaurentT t = term(factor, shift);
      q += t;
      rem -= t * den;
      if (!rem.isZero() && rem.maxExp() >= den.maxExp() + shift)
        throw InternalError("tryExactDiv: no cancellation");
    }
    if (!rem.isZero())
      return false;
    quot = q;
    return true;
  }

  /*
    Human-readable form: ascending powers with explicit signs; printed in u
    when every exponent is even and nonnegative, in v otherwise.
  */
  std::string toString() const {
    if (isZero())
      return "0";
    bool useU = true;
    if (d_off < 0)
      useU = false;
    else
      for (int e = d_off; e <= maxExp() && useU; ++e)
        if (!coeffIsZero(coeff(e)) && e % 2 != 0)
          useU = false;
    std::string out;
    bool first = true;
    for (int e = d_off; e <= maxExp(); ++e) {
      C c = coeff(e);
      if (coeffIsZero(c))
        continue;
      bool neg = coeffIsNegative(c);
      std::string mag = coeffToString(neg ? C(-c) : c);
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? "-" : "+";
      first = false;
      int shown = useU ? e / 2 : e;
      std::string var = useU ? "u" : "v";
      if (shown == 0) {
        out += mag;
      } else {
        if (mag != "1")
          out += mag;
        out += var;
        if (shown != 1)
          out += "^" + std::to_string(shown);
      }
    }
    return out;
  }

  const std::vector<C>& coeffs() const { return d_coeffs; }
  int offset() const { return d_off; }

  static LaurentT fromRaw(int off, std::vector<C> coeffs) {
    LaurentT p;
    p.d_off = off;
    p.d_coeffs = std::move(coeffs);
    p.normalize();
    return p;
  }

private:
  int d_off = 0;
  std::vector<C> d_coeffs;

  void requireNonzero(const char* who) const {
    if (isZero())
      throw DomainError(std::string(who) + ": zero polynomial");
  }

  static bool coeffIsUnit(const Int& c) { return c == 1 || c == -1; }
  static bool coeffIsUnit(GF2 c) { return !c.isZero(); }
  static Int coeffDivUnit(const Int& c, const Int& lead) {
    return lead == 1 ? c : Int(-c);
  }
  static GF2 coeffDivUnit(GF2 c, GF2) { return c; }

  void normalize() {
    std::size_t lo = 0;
    while (lo < d_coeffs.size() && coeffIsZero(d_coeffs[lo]))
      ++lo;
    std::size_t hi = d_coeffs.size();
    while (hi > lo && coeffIsZero(d_coeffs[hi - 1]))
      --hi;
    if (lo == hi) {
      d_coeffs.clear();
      d_off = 0;
      return;
    }
    if (lo > 0 || hi < d_coeffs.size()) {
      std::vector<C> t(d_coeffs.begin() + static_cast<long>(lo),
                       d_coeffs.begin() + static_cast<long>(hi));
      d_coeffs = std::move(t);
      d_off += static_cast<int>(lo);
    }
  }
};

using Laurent = LaurentT<Int>;
using Laurent2 = LaurentT<GF2>;

// reduction of integer coefficients mod 2
inline Laurent2 mod2(const Laurent& p) {
  if (p.isZero())
    return Laurent2();
  std::vector<GF2> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    cs.push_back(GF2(static_cast<int>(c % 2 != 0)));
  return Laurent2::fromRaw(p.offset(), std::move(cs));
}

// exact division of every coefficient by the integer k
inline Laurent divCoeffs(const Laurent& p, const Int& k) {
  if (k == 0)
    throw DomainError("divCoeffs: zero divisor");
  if (p.isZero())
    return Laurent();
  std::vector<Int> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c % k != 0)
      throw InternalError("divCoeffs: coefficient not divisible");
    cs.push_back(c / k);
  }
  return Laurent::fromRaw(p.offset(), std::move(cs));
}

}  // namespace ivh

#endif
