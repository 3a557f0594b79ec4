/*
  This is rpoly.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_RPOLY_H
#define IVH_RPOLY_H

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ivhecke/hecke.h"

namespace ivh {

/*
  The polynomials r_{y,w} attached to pairs of twisted involutions. They
  are defined through the bar involution on the rescaled basis
  a'_w = v^{-length(w)} a_w:

    bar(a'_w) = sum_y bar(r_{y,w}) a'_y,

  so a column {r_{y,w}}_y is read off one bar image:

    r_{y,w} = v^{-length(w)-length(y)} bar(coefficient of a_y in bar(a_w)).

  That is the production path. rByRecursion computes a single entry by the
  two-sided descent recursion instead (peel a descent s of w against the
  four possible positions of y relative to s) and never touches the module
  action, which makes the two paths independent checks of each other.

  Facts used downstream, all exercised by the tests: r_{w,w} = 1; r_{y,w}
  is nonzero exactly when y <= w in the Bruhat order; v^{-l(w)+l(y)} r_{y,w}
  lies in Z[v^{-2}] with constant term 1.
*/
class RTable {
public:
  using Elt = CoxeterSystem::Elt;
  using Column = std::map<Elt, Laurent>;

  explicit RTable(HeckeModule& module) : d_module(module) {}

  HeckeModule& module() const { return d_module; }
  CoxeterSystem& system() const { return d_module.system(); }
  Involutions& involutions() const { return d_module.involutions(); }

  // all nonzero r_{y,w} for fixed w, keyed by y; cached
  const Column& column(Elt w);
  Laurent r(Elt y, Elt w);

  // the same value along the descent recursion, memoized
  Laurent rByRecursion(Elt y, Elt w);

private:
  HeckeModule& d_module;

  mutable std::recursive_mutex d_lock;
  std::unordered_map<Elt, Column> d_columns;
  std::unordered_map<std::uint64_t, Laurent> d_memo;

  Laurent recursionLocked(Elt x, Elt w);
};

}  // namespace ivh

#endif
