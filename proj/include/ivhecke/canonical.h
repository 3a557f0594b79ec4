/*
  This is canonical.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_CANONICAL_H
#define IVH_CANONICAL_H

#include <map>
#include <mutex>
#include <unordered_map>

#include "ivhecke/rpoly.h"

namespace ivh {

/*
  The canonical basis {A_w} of the module: A_w is the unique bar-fixed
  element of the form

    A_w = sum_{y <= w} pi_{y,w} a'_y,    a'_y = v^{-length(y)} a_y,

  with pi_{w,w} = 1 and pi_{y,w} in strictly negative powers of v for
  y < w. A column {pi_{y,w}}_y is produced by one triangular solve downward
  from w: with the pi at longer elements known, the combination

    alpha_x = sum_{x < y <= w} r_{x,y} pi_{y,w}

  satisfies alpha_x + bar(alpha_x) = 0 (checked at runtime) and
  pi_{x,w} = -(strictly negative part of alpha_x).

  P^pm_{y,w} = v^{l(w)-l(y)} pi_{y,w} is a polynomial in u = v^2 with
  constant term 1 (both checked at runtime). mu' and mu'' are the
  coefficients of v^{-1} and v^{-2} in pi, and csCoefficient combines them
  into the structure constant of the c_s = u^{-1}(T_s + 1) action on the
  canonical basis.
*/
class CanonicalBasis {
public:
  using Elt = CoxeterSystem::Elt;
  using Column = std::map<Elt, Laurent>;

  explicit CanonicalBasis(RTable& rtable) : d_r(rtable) {}

  RTable& rTable() const { return d_r; }
  CoxeterSystem& system() const { return d_r.system(); }
  Involutions& involutions() const { return d_r.involutions(); }

  // pi_{y,w} for all y <= w, keyed by y; cached
  const Column& column(Elt w);
  Laurent pi(Elt y, Elt w);   // zero when y is not below w
  Laurent pPM(Elt y, Elt w);  // v^{l(w)-l(y)} pi_{y,w}, a polynomial in u

  MElt aBasis(Elt w);  // A_w written in the basis {a_y}

  Int muPrime(Elt y, Elt w);   // coefficient of v^{-1} in pi_{y,w}
  Int muSecond(Elt y, Elt w);  // coefficient of v^{-2} in pi_{y,w}

  // the coefficient of A_y in c_s A_w, for sy < y and sw > w
  Laurent csCoefficient(int s, Elt y, Elt w);

  MElt csAction(int s, const MElt& m);  // c_s = u^{-1}(T_s + 1)

  // rewrite a module vector in the canonical basis by peeling the
  // maximal term; the expansion is exact because the basis is triangular
  std::map<Elt, Laurent> expandInABasis(MElt m);

private:
  RTable& d_r;

  mutable std::recursive_mutex d_lock;
  std::unordered_map<Elt, Column> d_columns;
};

}  // namespace ivh

#endif
