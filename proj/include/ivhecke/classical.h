/*
  This is classical.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_CLASSICAL_H
#define IVH_CLASSICAL_H

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ivhecke/coxeter.h"
#include "ivhecke/laurent.h"

namespace ivh {

/*
  The regular Hecke algebra over the whole group, in the basis (t_w) with

    t_w t_{w'} = t_{ww'}        when the lengths add,
    (t_s + 1)(t_s - v^2) = 0,

  so t_y t_s = t_{ys} going up and (u-1) t_y + u t_{ys} going down, u = v^2.
  The multiplication helpers below are templated over the coefficient ring
  because the mod-2 model repeats them over GF2.
*/
template <class C>
using TVec = std::map<CoxeterSystem::Elt, LaurentT<C>>;

template <class C>
void tAddTerm(TVec<C>& m, CoxeterSystem::Elt w, const LaurentT<C>& c) {
  if (c.isZero()) {
    return;
  }
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) {
    m.erase(it);
  }
}

template <class C>
TVec<C> tTimesGen(CoxeterSystem& W, const TVec<C>& xi, int s) {
  const LaurentT<C> u = LaurentT<C>::uPow(1);
  const LaurentT<C> one = LaurentT<C>::one();
  TVec<C> out;
  for (const auto& term : xi) {
    CoxeterSystem::Elt ys = W.rightMul(term.first, s);
    if (W.length(ys) > W.length(term.first)) {
      tAddTerm(out, ys, term.second);
    } else {
      tAddTerm(out, term.first, term.second * (u - one));
      tAddTerm(out, ys, term.second * u);
    }
  }
  return out;
}

template <class C>
TVec<C> genTimesT(CoxeterSystem& W, int s, const TVec<C>& xi) {
  const LaurentT<C> u = LaurentT<C>::uPow(1);
  const LaurentT<C> one = LaurentT<C>::one();
  TVec<C> out;
  for (const auto& term : xi) {
    CoxeterSystem::Elt sy = W.leftMul(s, term.first);
    if (W.length(sy) > W.length(term.first)) {
      tAddTerm(out, sy, term.second);
    } else {
      tAddTerm(out, term.first, term.second * (u - one));
      tAddTerm(out, sy, term.second * u);
    }
  }
  return out;
}

// xi t_s^{-1}, through t_s^{-1} = u^{-1} t_s + (u^{-1} - 1)
template <class C>
TVec<C> tTimesGenInverse(CoxeterSystem& W, const TVec<C>& xi, int s) {
  const LaurentT<C> ui = LaurentT<C>::uPow(-1);
  const LaurentT<C> one = LaurentT<C>::one();
  TVec<C> out = tTimesGen(W, xi, s);
  for (auto& term : out) {
    term.second *= ui;
  }
  for (const auto& term : xi) {
    tAddTerm(out, term.first, term.second * (ui - one));
  }
  return out;
}

/*
  KLTable produces the classical structure over the whole group: the bar
  involution ov{v^n t_x} = v^{-n} t_{x^{-1}}^{-1}, the polynomials rho from

    bar(t_w) = sum_{y <= w} bar(rho_{y,w}) v^{-l(w)-l(y)} t_y

  (with an independent one-sided descent recursion as the second path), and
  the Kazhdan-Lusztig column p_{y,w} = v^{-l(y)+... } obtained by the same
  triangular bar solve as the twisted table, now indexed by the full Bruhat
  interval. klPolynomial(y, w) = v^{l(w)-l(y)} p_{y,w} is a polynomial in u
  with constant term 1 (checked at runtime).
*/
class KLTable {
public:
  using Elt = CoxeterSystem::Elt;
  using Column = std::map<Elt, Laurent>;

  explicit KLTable(CoxeterSystem& system) : d_system(system) {}

  CoxeterSystem& system() const { return d_system; }

  const TVec<Int>& barBasisT(Elt w);     // ov{t_w}, cached
  TVec<Int> barT(const TVec<Int>& xi);   // the full bar involution

  const Column& rhoColumn(Elt w);
  Laurent rho(Elt y, Elt w);
  Laurent rhoByRecursion(Elt y, Elt w);

  const Column& pColumn(Elt w);
  Laurent p(Elt y, Elt w);
  Laurent klPolynomial(Elt y, Elt w);  // v^{l(w)-l(y)} p_{y,w}

private:
  CoxeterSystem& d_system;

  mutable std::recursive_mutex d_lock;
  std::unordered_map<Elt, TVec<Int>> d_barBasis;
  std::unordered_map<Elt, Column> d_rho;
  std::unordered_map<Elt, Column> d_p;
  std::unordered_map<std::uint64_t, Laurent> d_rhoMemo;

  Laurent rhoRecursionLocked(Elt x, Elt w);
};

}  // namespace ivh

#endif
