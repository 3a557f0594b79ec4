/*
  This is barsolve.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_BARSOLVE_H
#define IVH_BARSOLVE_H

#include <map>
#include <vector>

#include "ivhecke/error.h"
#include "ivhecke/laurent.h"

namespace ivh {

/*
  The triangular solve shared by every canonical-basis construction in this
  library: given a table r with r(x, x) = 1 and r(x, y) = 0 unless y is
  above x, produce the unique column pi with

    pi_top = 1,
    bar(pi_x) - pi_x = alpha_x := sum_{y earlier in order} r(x, y) pi_y,
    pi_x supported on strictly negative powers of v below the top.

  order lists the index set top first, and such that r(x, y) != 0 with
  y != x only for y listed before x (any length-decreasing order works for
  the tables in this library). Each alpha_x must be anti-self-dual,
  alpha_x + bar(alpha_x) = 0; that is forced by the orthogonality relation
  of the table and is checked at runtime rather than trusted.
*/
template <class Key, class RFn>
std::map<Key, Laurent> solveBarTriangle(const std::vector<Key>& order,
                                        RFn r) {
  std::map<Key, Laurent> out;
  bool top = true;
  for (const Key& x : order) {
    if (top) {
      out.emplace(x, Laurent::one());
      top = false;
      continue;
    }
    Laurent alpha;
    for (const auto& done : out) {
      alpha += r(x, done.first) * done.second;
    }
    if (!(alpha + alpha.bar()).isZero()) {
      throw InternalError("bar fixed point system is not anti-self-dual");
    }
    out.emplace(x, -alpha.negPart());
  }
  return out;
}

}  // namespace ivh

#endif
