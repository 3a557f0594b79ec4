/*
  This is hecke.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_HECKE_H
#define IVH_HECKE_H

#include <map>
#include <mutex>
#include <unordered_map>

#include "ivhecke/involution.h"
#include "ivhecke/laurent.h"

namespace ivh {

/*
  A module vector: finitely many basis elements a_w, indexed by twisted
  involutions w, with Laurent coefficients. Zero coefficients are never
  stored; every mutation goes through mAddTerm, which erases on cancel.
*/
using MElt = std::map<CoxeterSystem::Elt, Laurent>;

void mAddTerm(MElt& m, CoxeterSystem::Elt w, const Laurent& c);
void mAddScaled(MElt& dst, const Laurent& c, const MElt& src);
void mScale(MElt& m, const Laurent& c);
Laurent mCoeff(const MElt& m, CoxeterSystem::Elt w);
bool mEq(const MElt& a, const MElt& b);

/*
  HeckeModule is the Hecke-algebra action on the free module spanned by
  {a_w}, w running over the twisted involutions. The generator T_s obeys
  the quadratic relation (T_s - u^2)(T_s + 1) = 0 and acts by

    sw = ws^*, sw > w :  T_s a_w = u a_w + (u+1) a_{sw}
    sw = ws^*, sw < w :  T_s a_w = (u^2-u-1) a_w + (u^2-u) a_{sw}
    sw != ws^*, sw > w:  T_s a_w = a_{sws^*}
    sw != ws^*, sw < w:  T_s a_w = (u^2-1) a_w + u^2 a_{sws^*}

  where u = v^2. The inverse action is applied directly through the
  expansion T_s^{-1} = u^{-2} T_s + (u^{-2} - 1).

  The bar involution is the unique antilinear map with bar(a_1) = a_1 and
  bar(T_s m) = T_s^{-1} bar(m); on a basis element it evaluates as

    bar(a_w) = (-1)^{length(w)} T_{w^{-1}}^{-1} a_{w^{-1}},

  and bar(a_w) is cached per element.
*/
class HeckeModule {
public:
  using Elt = CoxeterSystem::Elt;

  HeckeModule(CoxeterSystem& system, Involutions& involutions)
      : d_system(system), d_involutions(involutions) {}

  CoxeterSystem& system() const { return d_system; }
  Involutions& involutions() const { return d_involutions; }

  static MElt basis(Elt w);

  MElt tsAction(int s, const MElt& m);
  MElt tsInverseAction(int s, const MElt& m);
  MElt actT(Elt x, const MElt& m);         // T_x m
  MElt actTInverse(Elt x, const MElt& m);  // T_x^{-1} m

  MElt bar(const MElt& m);
  const MElt& barBasis(Elt w);  // cached bar(a_w)

private:
  CoxeterSystem& d_system;
  Involutions& d_involutions;

  mutable std::recursive_mutex d_lock;
  std::unordered_map<Elt, MElt> d_barBasis;
};

}  // namespace ivh

#endif
