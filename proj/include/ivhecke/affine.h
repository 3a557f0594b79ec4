/*
  This is affine.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_AFFINE_H
#define IVH_AFFINE_H

#include <cstdint>
#include <vector>

#include "ivhecke/canonical.h"
#include "ivhecke/classical.h"
#include "ivhecke/cosets.h"

namespace ivh {

/*
  AffineSetup distinguishes one generator s_0 whose removal leaves a finite
  parabolic subgroup W_K, with a star permutation that fixes s_0. In this
  situation every (W_K, W_K) double coset has a maximal element d that is a
  twisted involution, and the split polynomials at pairs of maximal
  elements can be scanned against the classical polynomials evaluated at
  -u; at u = 1 the classical value is a weight multiplicity.

  For the pair of cosets through s_0 and through the identity the column of
  the canonical basis at the larger d has a closed form governed by the
  exponents of W_K (read off the parabolic growth series), valid when W_K
  has all bonds 2 or 3.
*/
class AffineSetup {
public:
  using Elt = CoxeterSystem::Elt;
  using Mask = std::uint32_t;

  struct ScanRow {
    Elt d_dPrime;
    Elt d_d;
    Laurent d_split;         // the split polynomial at (d', d)
    Laurent d_classicalNegU; // the classical polynomial with u -> -u
    bool d_equal;
    Int d_multiplicity;      // classical value at u = 1
  };

  AffineSetup(RTable& table, int affineGen, std::size_t cap);

  CoxeterSystem& system() const { return d_table.system(); }
  Involutions& involutions() const { return d_table.involutions(); }
  CanonicalBasis& canonical() { return d_canonical; }
  KLTable& classical() { return d_classical; }
  int affineGen() const { return d_affineGen; }
  Mask kMask() const { return d_kMask; }

  // all double cosets with maximal length at most maxLen, sorted by
  // (length, word) of the maximal element; each maximal element is
  // checked to be a twisted involution
  std::vector<DoubleCoset> cosets(int maxLen);

  // index pairs (i', i) into a coset list with d_{i'} <= d_i
  std::vector<std::pair<std::size_t, std::size_t>> lowerPairs(
      std::vector<DoubleCoset>& cosets);

  std::vector<ScanRow> scan(int maxLen);

  // exponents e_1 <= ... <= e_n extracted from a growth series by greedy
  // division, largest block first
  static std::vector<int> exponents(const Laurent& growthSeries);
  std::vector<int> parabolicExponents();

  // the closed form for the column at the coset through the affine
  // generator, checked against the computed column and against the
  // exponent formulas for the classical and split polynomials
  bool checkClosedForm();

private:
  RTable& d_table;
  CanonicalBasis d_canonical;
  KLTable d_classical;
  int d_affineGen;
  Mask d_kMask;
  std::size_t d_cap;
};

}  // namespace ivh

#endif
