/*
  This is affine.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/affine.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "ivhecke/error.h"

namespace ivh {

namespace {

// exact division by a monic polynomial, working down from the top term;
// returns false when a nonzero remainder is left over
bool tryDiv(const Laurent& num, const Laurent& den, Laurent& quot) {
  Laurent rem = num;
  Laurent q;
  while (!rem.isZero() && rem.maxExp() >= den.maxExp()) {
    Laurent t = Laurent::term(rem.coeff(rem.maxExp()),
                              rem.maxExp() - den.maxExp());
    q += t;
    rem -= t * den;
  }
  if (!rem.isZero()) {
    return false;
  }
  quot = q;
  return true;
}

}  // namespace

AffineSetup::AffineSetup(RTable& table, int affineGen, std::size_t cap)
    : d_table(table),
      d_canonical(table),
      d_classical(table.system()),
      d_affineGen(affineGen),
      d_cap(cap) {
  CoxeterSystem& w = system();
  if (affineGen < 0 || affineGen >= w.rank()) {
    throw DomainError("affine generator out of range");
  }
  if (w.starGen(affineGen) != affineGen) {
    throw DomainError("the star permutation must fix the affine generator");
  }
  d_kMask = w.fullMask() & ~(1u << affineGen);
  if (!w.parabolicIsFinite(d_kMask, cap)) {
    throw DomainError(
        "removing the affine generator must leave a finite subgroup");
  }
}

std::vector<DoubleCoset> AffineSetup::cosets(int maxLen) {
  CoxeterSystem& w = system();
  std::set<Elt> minimals;
  for (auto x : w.enumerate(maxLen, d_cap)) {
    minimals.insert(DoubleCoset::minimalElement(w, d_kMask, x));
  }
  std::vector<DoubleCoset> out;
  for (auto b : minimals) {
    DoubleCoset coset(w, involutions(), d_kMask, b, d_cap);
    if (w.length(coset.maximal()) > maxLen) {
      continue;
    }
    if (!involutions().isTwisted(coset.maximal())) {
      throw InternalError(
          "a maximal double coset element is not a twisted involution");
    }
    if (!coset.starStable()) {
      throw InternalError("an affine double coset is not star-stable");
    }
    out.push_back(std::move(coset));
  }
  // reference members block move assignment, so order through an index
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return w.before(out[a].maximal(), out[b].maximal());
  });
  std::vector<DoubleCoset> sorted;
  sorted.reserve(out.size());
  for (auto i : order) {
    sorted.push_back(std::move(out[i]));
  }
  return sorted;
}

std::vector<std::pair<std::size_t, std::size_t>> AffineSetup::lowerPairs(
    std::vector<DoubleCoset>& cosets) {
  CoxeterSystem& w = system();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t iPrime = 0; iPrime < cosets.size(); ++iPrime) {
      if (w.bruhatLeq(cosets[iPrime].maximal(), cosets[i].maximal())) {
        out.emplace_back(iPrime, i);
      }
    }
  }
  return out;
}

std::vector<AffineSetup::ScanRow> AffineSetup::scan(int maxLen) {
  std::vector<DoubleCoset> cs = cosets(maxLen);
  std::vector<ScanRow> rows;
  for (auto [iPrime, i] : lowerPairs(cs)) {
    ScanRow row;
    row.d_dPrime = cs[iPrime].maximal();
    row.d_d = cs[i].maximal();
    row.d_split = d_canonical.pPM(row.d_dPrime, row.d_d);
    Laurent kl = d_classical.klPolynomial(row.d_dPrime, row.d_d);
    row.d_classicalNegU = kl.substituteMinusU();
    row.d_equal = row.d_split == row.d_classicalNegU;
    row.d_multiplicity = kl.evalOne();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> AffineSetup::exponents(const Laurent& growthSeries) {
  if (growthSeries.isZero() || !growthSeries.isUPolynomial() ||
      growthSeries.minExp() != 0 || growthSeries.coeff(0) != Int(1)) {
    throw DomainError(
        "exponent extraction needs a polynomial in u with constant term 1");
  }
  Laurent p = growthSeries;
  std::vector<int> out;
  while (p != Laurent::one()) {
    int top = p.maxExp() / 2;
    bool found = false;
    for (int e = top; e >= 1; --e) {
      Laurent block;
      for (int j = 0; j <= e; ++j) {
        block += Laurent::uPow(j);
      }
      Laurent q;
      if (tryDiv(p, block, q)) {
        out.push_back(e);
        p = q;
        found = true;
        break;
      }
    }
    if (!found) {
      throw InternalError(
          "growth series does not factor into exponent blocks");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> AffineSetup::parabolicExponents() {
  CoxeterSystem& w = system();
  Laurent series;
  for (auto x : w.finiteParabolic(d_kMask, d_cap)) {
    series += Laurent::uPow(w.length(x));
  }
  return exponents(series);
}

bool AffineSetup::checkClosedForm() {
  CoxeterSystem& w = system();
  for (int s = 0; s < w.rank(); ++s) {
    if ((d_kMask & (1u << s)) == 0) {
      continue;
    }
    for (int t = s + 1; t < w.rank(); ++t) {
      if ((d_kMask & (1u << t)) == 0) {
        continue;
      }
      int m = w.bond(s, t);
      if (m != 2 && m != 3) {
        throw DomainError(
            "the finite parabolic subgroup is not simply laced");
      }
    }
  }

  std::vector<int> ex = parabolicExponents();
  int eTop = ex.back();
  DoubleCoset omega(w, involutions(), d_kMask, w.generator(d_affineGen),
                    d_cap);
  DoubleCoset omegaPrime(w, involutions(), d_kMask,
                         CoxeterSystem::kIdentity, d_cap);
  int dLen = w.length(omega.maximal());
  int dPrimeLen = w.length(omegaPrime.maximal());
  if (dLen - dPrimeLen != 2 * eTop) {
    throw InternalError("coset length gap disagrees with the top exponent");
  }

  MElt expected;
  for (auto x : omega.twistedMembers(d_cap)) {
    mAddTerm(expected, x, Laurent::vPow(-dLen));
  }
  Laurent edge;
  for (int e : ex) {
    Laurent t = Laurent::uPow(-e);
    edge += (e % 2 != 0) ? -t : t;
  }
  if (eTop % 2 != 0) {
    edge = -edge;
  }
  edge *= Laurent::vPow(-dPrimeLen);
  for (auto x : omegaPrime.twistedMembers(d_cap)) {
    mAddTerm(expected, x, edge);
  }
  bool ok = mEq(d_canonical.aBasis(omega.maximal()), expected);

  Laurent classicalExpected;
  Laurent splitExpected;
  for (int e : ex) {
    Laurent t = Laurent::uPow(e - 1);
    classicalExpected += t;
    splitExpected += ((e - 1) % 2 != 0) ? -t : t;
  }
  ok = ok && d_classical.klPolynomial(omegaPrime.maximal(),
                                      omega.maximal()) == classicalExpected;
  ok = ok && d_canonical.pPM(omegaPrime.maximal(), omega.maximal()) ==
                 splitExpected;
  return ok;
}

}  // namespace ivh
