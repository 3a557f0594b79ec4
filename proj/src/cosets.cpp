/*
  This is cosets.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/cosets.h"

#include <algorithm>
#include <bit>
#include <map>

#include "ivhecke/error.h"

namespace ivh {

namespace {

std::vector<int> maskBits(std::uint32_t mask) {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s) {
    if (mask & (1u << s)) {
      out.push_back(s);
    }
  }
  return out;
}

// the alternating word of the given length starting with the given letter
CoxeterSystem::Word alternating(int first, int second, int length) {
  CoxeterSystem::Word out;
  for (int i = 0; i < length; ++i) {
    out.push_back(static_cast<char>(i % 2 == 0 ? first : second));
  }
  return out;
}

}  // namespace

DoubleCoset::DoubleCoset(CoxeterSystem& system, Involutions& involutions,
                         Mask k, Elt seed, std::size_t cap)
    : d_system(system), d_involutions(involutions), d_cap(cap), d_k(k) {
  if ((k & ~system.fullMask()) != 0) {
    throw DomainError("generator subset is out of range");
  }
  for (int s : maskBits(d_k)) {
    d_kStar |= 1u << d_system.starGen(s);
  }
  if (!d_system.parabolicIsFinite(d_k, d_cap) ||
      !d_system.parabolicIsFinite(d_kStar, d_cap)) {
    throw DomainError("the parabolic subgroup of the coset is not finite");
  }

  d_b = minimalElement(d_system, d_k, seed);

  // J = {s in K : b^{-1} s b is a generator of K*}, J* its image
  for (int s : maskBits(d_k)) {
    Elt conj = d_system.mul(
        d_system.mul(d_system.inverse(d_b), d_system.generator(s)), d_b);
    if (d_system.length(conj) != 1) {
      continue;
    }
    int t = static_cast<int>(d_system.wordOf(conj)[0]);
    if (d_kStar & (1u << t)) {
      d_j |= 1u << s;
      d_jStar |= 1u << t;
    }
  }

  Elt wK = d_system.longestElement(d_k, d_cap);
  Elt wJ = d_system.longestElement(d_j, d_cap);
  Elt wKStar = d_system.longestElement(d_kStar, d_cap);
  d_d = d_system.mul(d_system.mul(d_system.mul(wK, wJ), d_b), wKStar);
  if (d_system.length(d_d) != d_system.length(wK) + d_system.length(d_b) +
                                  d_system.length(wKStar) -
                                  d_system.length(wJ)) {
    throw InternalError("maximal coset element has the wrong length");
  }

  d_starStable = d_involutions.isTwisted(d_b);
  if (d_starStable) {
    if (!d_involutions.isTwisted(d_d)) {
      throw InternalError("maximal element of a stable coset is not twisted");
    }
    Mask starOfJ = 0;
    for (int s : maskBits(d_j)) {
      starOfJ |= 1u << d_system.starGen(s);
    }
    if (starOfJ != d_jStar) {
      throw InternalError("conjugation by b does not match star on J");
    }
    buildTau();
  }
}

DoubleCoset::Elt DoubleCoset::minimalElement(CoxeterSystem& system, Mask k,
                                             Elt x) {
  Mask kStar = 0;
  for (int s : maskBits(k)) {
    kStar |= 1u << system.starGen(s);
  }
  for (;;) {
    Mask left = system.leftDescentMask(x) & k;
    if (left != 0) {
      x = system.leftMul(std::countr_zero(left), x);
      continue;
    }
    Mask right = system.rightDescentMask(x) & kStar;
    if (right != 0) {
      x = system.rightMul(x, std::countr_zero(right));
      continue;
    }
    return x;
  }
}

bool DoubleCoset::contains(Elt x) {
  return minimalElement(d_system, d_k, x) == d_b;
}

DoubleCoset::Coordinates DoubleCoset::decompose(Elt x) {
  if (!contains(x)) {
    throw DomainError("element is not in this double coset");
  }
  CoxeterSystem::Word reversedDPrime;
  Elt y = x;
  for (;;) {
    Mask right = d_system.rightDescentMask(y) & d_kStar;
    if (right == 0) {
      break;
    }
    int t = std::countr_zero(right);
    reversedDPrime.push_back(static_cast<char>(t));
    y = d_system.rightMul(y, t);
  }
  CoxeterSystem::Word dPrimeWord(reversedDPrime.rbegin(),
                                 reversedDPrime.rend());
  Elt dPrime = d_system.fromLetters(dPrimeWord);
  Elt c = d_system.mul(y, d_system.inverse(d_b));
  if (d_system.length(c) != d_system.length(y) - d_system.length(d_b) ||
      (d_system.rightDescentMask(c) & d_j) != 0 ||
      d_system.length(x) != d_system.length(c) + d_system.length(d_b) +
                                d_system.length(dPrime)) {
    throw InternalError("coset coordinates are inconsistent");
  }
  for (char letter : d_system.wordOf(c)) {
    if ((d_k & (1u << static_cast<int>(letter))) == 0) {
      throw InternalError("coset coordinate c leaves the parabolic");
    }
  }
  return Coordinates{c, dPrime};
}

void DoubleCoset::buildTau() {
  d_tauGens = maskBits(d_jStar);
  if (d_tauGens.empty()) {
    return;  // trivial subsystem, kept implicit
  }
  std::size_t n = d_tauGens.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 1));
  std::vector<int> star(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(d_system.label(d_tauGens[i]));
    for (std::size_t jj = 0; jj < n; ++jj) {
      matrix[i][jj] = d_system.bond(d_tauGens[i], d_tauGens[jj]);
    }
  }
  Elt bInv = d_system.inverse(d_b);
  for (std::size_t i = 0; i < n; ++i) {
    Elt image = d_system.mul(
        d_system.mul(bInv,
                     d_system.star(d_system.generator(d_tauGens[i]))),
        d_b);
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (image == d_system.generator(d_tauGens[jj])) {
        star[i] = static_cast<int>(jj);
        break;
      }
    }
    if (star[i] < 0) {
      throw InternalError("tau does not permute the subsystem generators");
    }
  }
  d_tauSystem.reset(new CoxeterSystem(labels, matrix, star));
  d_tauInvolutions.reset(new Involutions(*d_tauSystem));
}

CoxeterSystem& DoubleCoset::tauSystem() {
  if (!d_tauSystem) {
    throw DomainError("coset has no twisted subsystem");
  }
  return *d_tauSystem;
}

Involutions& DoubleCoset::tauInvolutions() {
  if (!d_tauInvolutions) {
    throw DomainError("coset has no twisted subsystem");
  }
  return *d_tauInvolutions;
}

DoubleCoset::Elt DoubleCoset::embed(Elt z) {
  if (!d_tauSystem) {
    if (z != CoxeterSystem::kIdentity) {
      throw DomainError("coset has no twisted subsystem");
    }
    return CoxeterSystem::kIdentity;
  }
  CoxeterSystem::Word inner = d_tauSystem->wordOf(z);
  CoxeterSystem::Word outer;
  for (char letter : inner) {
    outer.push_back(
        static_cast<char>(d_tauGens[static_cast<std::size_t>(letter)]));
  }
  return d_system.fromLetters(outer);
}

std::vector<DoubleCoset::Elt> DoubleCoset::twistedMembers(std::size_t cap) {
  if (!d_starStable) {
    return {};
  }

  std::vector<Elt> zs;
  if (d_tauSystem) {
    int top = d_tauSystem->length(
        d_tauSystem->longestElement(d_tauSystem->fullMask(), cap));
    for (Elt z : d_tauInvolutions->all(top, cap)) {
      zs.push_back(embed(z));
    }
  } else {
    zs.push_back(CoxeterSystem::kIdentity);
  }

  std::vector<Elt> out;
  for (Elt c : d_system.finiteParabolic(d_k, cap)) {
    if ((d_system.rightDescentMask(c) & d_j) != 0) {
      continue;
    }
    Elt cStarInv = d_system.star(d_system.inverse(c));
    for (Elt z : zs) {
      Elt x = d_system.mul(d_system.mul(d_system.mul(c, d_b), z), cStarInv);
      if (!d_involutions.isTwisted(x)) {
        throw InternalError("parametrized coset member is not twisted");
      }
      if (d_system.length(x) != 2 * d_system.length(c) +
                                    d_system.length(d_b) +
                                    d_system.length(z)) {
        throw InternalError("parametrized coset member has the wrong length");
      }
      out.push_back(x);
    }
  }
  d_system.sortElements(out);
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InternalError("coset parametrization is not injective");
  }

  // independent production: filter the twisted involutions up to l(d)
  std::vector<Elt> filtered;
  for (Elt x : d_involutions.all(d_system.length(d_d), cap)) {
    if (contains(x)) {
      filtered.push_back(x);
    }
  }
  if (filtered != out) {
    throw InternalError("coset parametrization misses twisted members");
  }
  return out;
}

std::vector<std::pair<int, DoubleCoset::Elt>> DoubleCoset::chainToMin(Elt x) {
  if (!d_involutions.isTwisted(x) || !contains(x)) {
    throw DomainError("chain must start at a twisted member of the coset");
  }
  std::vector<std::pair<int, Elt>> out;
  while (x != d_b) {
    Mask down = d_system.leftDescentMask(x) & d_k;
    if (down == 0) {
      throw InternalError("twisted coset member has no descent toward b");
    }
    int s = std::countr_zero(down);
    x = d_involutions.dot(s, x);
    out.emplace_back(s, x);
  }
  return out;
}

std::string DoubleCoset::caseTag() {
  if (!d_starStable) {
    return "";
  }
  std::vector<int> gens = maskBits(d_k);
  if (gens.size() == 1) {
    int s = gens[0];
    Elt sb = d_system.leftMul(s, d_b);
    Elt bs = d_system.rightMul(d_b, d_system.starGen(s));
    return sb == bs ? "i" : "ii";
  }
  if (gens.size() != 2) {
    return "";
  }
  int s = gens[0];
  int t = gens[1];
  Elt sb = d_system.leftMul(s, d_b);
  Elt tb = d_system.leftMul(t, d_b);
  Elt bsStar = d_system.rightMul(d_b, d_system.starGen(s));
  Elt btStar = d_system.rightMul(d_b, d_system.starGen(t));
  int m = d_system.bond(s, t);
  if (sb == btStar) {
    return m % 2 == 1 ? "vi" : "vii";
  }
  if (sb == bsStar && tb == btStar) {
    return m % 2 == 1 ? "iv" : "v";
  }
  if (sb == bsStar) {
    return "ii";
  }
  if (tb == btStar) {
    return "iii";
  }
  return "i";
}

DoubleCoset::Chains DoubleCoset::rank2Chains() {
  std::vector<int> gens = maskBits(d_k);
  if (gens.size() != 2 || !d_starStable) {
    throw DomainError("chains are classified for stable rank 2 cosets only");
  }
  int s = gens[0];
  int t = gens[1];
  int m = d_system.bond(s, t);

  Chains chains;
  chains.d_tag = caseTag();

  auto conjugate = [&](const CoxeterSystem::Word& word) {
    Elt g = d_system.fromLetters(word);
    return d_system.mul(d_system.mul(d_system.inverse(g), d_b),
                        d_system.star(g));
  };
  auto mixed = [&](const CoxeterSystem::Word& left,
                   const CoxeterSystem::Word& right) {
    Elt g = d_system.fromLetters(left);
    Elt h = d_system.fromLetters(right);
    return d_system.mul(d_system.mul(d_system.inverse(g), d_b),
                        d_system.star(h));
  };
  auto leftTimesB = [&](const CoxeterSystem::Word& word) {
    return d_system.mul(d_system.fromLetters(word), d_b);
  };
  // grow an alternating word outward: other(front) + w + other(back)
  auto widen = [&](const CoxeterSystem::Word& w) {
    int front = static_cast<int>(w.front()) == s ? t : s;
    int back = static_cast<int>(w.back()) == s ? t : s;
    CoxeterSystem::Word out;
    out.push_back(static_cast<char>(front));
    out += w;
    out.push_back(static_cast<char>(back));
    return out;
  };

  if (chains.d_tag == "i") {
    for (int i = 0; i <= m; ++i) {
      chains.d_xi.push_back(conjugate(alternating(s, t, i)));
      chains.d_xiPrime.push_back(conjugate(alternating(t, s, i)));
    }
  } else if (chains.d_tag == "ii" || chains.d_tag == "iii") {
    int a = chains.d_tag == "ii" ? t : s;  // the letter opening the chain
    int o = chains.d_tag == "ii" ? s : t;
    for (int i = 0; i <= m - 1; ++i) {
      chains.d_xi.push_back(conjugate(alternating(a, o, i)));
      chains.d_xi.push_back(
          mixed(alternating(a, o, i), alternating(o, a, i + 1)));
    }
  } else if (chains.d_tag == "iv" || chains.d_tag == "v") {
    chains.d_xi.push_back(d_b);
    chains.d_xiPrime.push_back(d_b);
    CoxeterSystem::Word xiWord(1, static_cast<char>(s));
    CoxeterSystem::Word xiPrimeWord(1, static_cast<char>(t));
    for (int k2 = 1; k2 <= m - (chains.d_tag == "v" ? 1 : 0); k2 += 2) {
      chains.d_xi.push_back(leftTimesB(xiWord));
      chains.d_xiPrime.push_back(leftTimesB(xiPrimeWord));
      xiWord = widen(xiWord);
      xiPrimeWord = widen(xiPrimeWord);
    }
    if (chains.d_tag == "v") {
      Elt top = leftTimesB(alternating(s, t, m));
      chains.d_xi.push_back(top);
      chains.d_xiPrime.push_back(top);
    }
  } else {
    chains.d_xi.push_back(d_b);
    chains.d_xiPrime.push_back(d_b);
    CoxeterSystem::Word xiWord = alternating(s, t, 2);
    CoxeterSystem::Word xiPrimeWord = alternating(t, s, 2);
    for (int k2 = 2; k2 <= m - (chains.d_tag == "vi" ? 1 : 0); k2 += 2) {
      chains.d_xi.push_back(leftTimesB(xiWord));
      chains.d_xiPrime.push_back(leftTimesB(xiPrimeWord));
      xiWord = widen(xiWord);
      xiPrimeWord = widen(xiPrimeWord);
    }
    if (chains.d_tag == "vi") {
      Elt top = leftTimesB(alternating(s, t, m));
      chains.d_xi.push_back(top);
      chains.d_xiPrime.push_back(top);
    }
  }
  return chains;
}

std::vector<DoubleCoset> starStableCosets(CoxeterSystem& system,
                                          Involutions& involutions,
                                          DoubleCoset::Mask k, int maxLen,
                                          std::size_t cap) {
  std::map<DoubleCoset::Elt, bool> seen;
  std::vector<DoubleCoset> out;
  for (DoubleCoset::Elt x : involutions.all(maxLen, cap)) {
    DoubleCoset::Elt b = DoubleCoset::minimalElement(system, k, x);
    if (seen.emplace(b, true).second) {
      DoubleCoset coset(system, involutions, k, b, cap);
      if (system.length(coset.maximal()) <= maxLen) {
        out.push_back(std::move(coset));
      }
    }
  }
  // reference members block move assignment, so order through an index
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&system, &out](std::size_t a, std::size_t b) {
              return system.before(out[a].maximal(), out[b].maximal());
            });
  std::vector<DoubleCoset> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) {
    sorted.push_back(std::move(out[i]));
  }
  return sorted;
}

}  // namespace ivh
