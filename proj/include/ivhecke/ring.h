/*
  This is ring.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_RING_H
#define IVH_RING_H

#include <vector>

#include "ivhecke/error.h"

namespace ivh {

using Coord = long long;

/*
  GeomRing is the exact coefficient ring for the geometric (reflection)
  representation of a Coxeter system. The representation needs the numbers
  c_m = 2cos(pi/m) for the bond values m of the diagram: c_2 = 0, c_3 = 1,
  c_inf = 2, and for each finite m >= 4 an algebraic generator whose minimal
  polynomial over Z is the even cyclotomic fold Psi_{2m} of degree
  phi(2m)/2. The ring is the tensor product of Z[x]/(Psi_{2m}) over the
  distinct such m; elements are dense coordinate vectors over the monomial
  basis (mixed-radix products of generator powers below their degrees).

  Coordinates are checked 64-bit integers: any overflow throws InternalError
  rather than wrapping, so an unsound configuration can only fail loudly.
*/
class GeomRing {
public:
  using Elt = std::vector<Coord>;

  // bonds: the list of distinct finite values m >= 4 appearing in the matrix
  explicit GeomRing(const std::vector<int>& bonds);

  int basisSize() const { return d_rank; }

  Elt zero() const { return Elt(static_cast<std::size_t>(d_rank), 0); }
  Elt integer(Coord n) const;

  // the class of 2cos(pi/m); m = 0 encodes infinity
  Elt bondValue(int m) const;

  bool isZero(const Elt& a) const;
  void addInto(Elt& a, const Elt& b) const;
  void subInto(Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt mulInt(const Elt& a, Coord n) const;
  Elt neg(const Elt& a) const;

  /*
    Sign under the real embeddings that make every basis monomial positive:
    +1 if all coordinates >= 0 with at least one > 0, -1 for the mirror
    case, 0 for zero. A mixed-sign vector escapes the dichotomy the descent
    walks rely on and raises InternalError.
  */
  int sign(const Elt& a) const;

  // minimal polynomial of 2cos(pi/m), ascending coefficients, monic
  static std::vector<Coord> minimalPolynomial(int m);

private:
  std::vector<int> d_bonds;  // sorted distinct m values with a generator
  std::vector<int> d_deg;    // degree of generator i
  std::vector<int> d_stride; // mixed-radix strides into the basis
  int d_rank = 1;
  // d_pow[i][k] = coordinates of x_i^k over 1, x_i, ..., x_i^{deg-1}
  std::vector<std::vector<std::vector<Coord>>> d_pow;

  int bondIndex(int m) const;
};

// checked coordinate arithmetic
inline Coord coordAdd(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r))
    throw InternalError("coordinate overflow in addition");
  return r;
}

inline Coord coordMul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("coordinate overflow in multiplication");
  return r;
}

}  // namespace ivh

#endif
