/*
  This is spherical.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/spherical.h"

#include <algorithm>
#include <set>

#include "ivhecke/barsolve.h"
#include "ivhecke/error.h"

namespace ivh {

namespace {

Laurent laurentPow(const Laurent& base, int k) {
  Laurent out = Laurent::one();
  for (int i = 0; i < k; ++i) {
    out = out * base;
  }
  return out;
}

std::vector<int> maskBits(std::uint32_t mask) {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s) {
    if (mask & (1u << s)) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

Laurent UFraction::uPlusOnePow(int k) {
  return laurentPow(Laurent::uPow(1) + Laurent::one(), k);
}

UFraction UFraction::operator+(const UFraction& o) const {
  int common = std::max(d_denPow, o.d_denPow);
  return UFraction{d_num * uPlusOnePow(common - d_denPow) +
                       o.d_num * uPlusOnePow(common - o.d_denPow),
                   common};
}

UFraction UFraction::operator*(const UFraction& o) const {
  return UFraction{d_num * o.d_num, d_denPow + o.d_denPow};
}

bool UFraction::operator==(const UFraction& o) const {
  return d_num * uPlusOnePow(o.d_denPow) == o.d_num * uPlusOnePow(d_denPow);
}

bool Spherical::isSpherical(const MElt& m, Mask k) {
  Involutions& inv = involutions();
  std::set<Elt> visited;
  for (const auto& term : m) {
    if (visited.count(term.first)) {
      continue;
    }
    // the dot orbit of K through this support element
    std::vector<Elt> orbit{term.first};
    visited.insert(term.first);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int s : maskBits(k)) {
        Elt next = inv.dot(s, orbit[head]);
        if (!visited.count(next)) {
          visited.insert(next);
          orbit.push_back(next);
        }
      }
    }
    for (Elt x : orbit) {
      if (mCoeff(m, x) != term.second) {
        return false;
      }
    }
  }
  return true;
}

bool Spherical::isSphericalByGenerators(const MElt& m, Mask k) {
  for (int s : maskBits(k)) {
    if (!isSpherical(m, 1u << s)) {
      return false;
    }
  }
  return true;
}

MElt Spherical::sigma(Mask k, const MElt& m, std::size_t cap) {
  MElt out;
  for (Elt x : system().finiteParabolic(k, cap)) {
    MElt part = d_module.actT(x, m);
    for (const auto& term : part) {
      mAddTerm(out, term.first, term.second);
    }
  }
  return out;
}

MElt Spherical::sumBasis(const std::vector<Elt>& members) {
  MElt out;
  for (Elt x : members) {
    mAddTerm(out, x, Laurent::one());
  }
  return out;
}

UFraction Spherical::zeta(const MElt& m) {
  Involutions& inv = involutions();
  const Laurent uMinusOne = Laurent::uPow(1) - Laurent::one();
  UFraction acc{Laurent(), 0};
  for (const auto& term : m) {
    int phi = inv.phi(term.first);
    UFraction part{term.second * Laurent::uPow(system().length(term.first)) *
                       laurentPow(uMinusOne, phi),
                   phi};
    acc = acc + part;
  }
  return acc;
}

Laurent Spherical::poincare(Mask k, std::size_t cap) {
  Laurent out;
  for (Elt x : system().finiteParabolic(k, cap)) {
    out += Laurent::uPow(system().length(x));
  }
  return out;
}

void Spherical::requireStarStable(Mask k) {
  Mask image = 0;
  for (int s : maskBits(k)) {
    image |= 1u << system().starGen(s);
  }
  if (image != k) {
    throw DomainError("generator subset is not star-stable");
  }
}

Laurent Spherical::poincareStarFixed(Mask k, std::size_t cap) {
  requireStarStable(k);
  Laurent out;
  for (Elt x : system().finiteParabolic(k, cap)) {
    if (system().star(x) == x) {
      out += Laurent::uPow(system().length(x));
    }
  }
  return out;
}

UFraction Spherical::twistedSeries(Mask k, std::size_t cap) {
  requireStarStable(k);
  Involutions& inv = involutions();
  const Laurent uMinusOne = Laurent::uPow(1) - Laurent::one();
  UFraction acc{Laurent(), 0};
  for (Elt x : system().finiteParabolic(k, cap)) {
    if (!inv.isTwisted(x)) {
      continue;
    }
    int phi = inv.phi(x);
    acc = acc + UFraction{Laurent::uPow(system().length(x)) *
                              laurentPow(uMinusOne, phi),
                          phi};
  }
  return acc;
}

Laurent Spherical::tauFixedSeries(DoubleCoset& coset, std::size_t cap) {
  if (coset.jMask() == 0) {
    return Laurent::one();
  }
  CoxeterSystem& sub = coset.tauSystem();
  Laurent out;
  for (Elt z : sub.finiteParabolic(sub.fullMask(), cap)) {
    if (sub.star(z) == z) {
      out += Laurent::uPow(sub.length(z));
    }
  }
  return out;
}

UFraction Spherical::tauTwistedSeries(DoubleCoset& coset, std::size_t cap) {
  if (coset.jMask() == 0) {
    return UFraction::one();
  }
  CoxeterSystem& sub = coset.tauSystem();
  Involutions& inv = coset.tauInvolutions();
  const Laurent uMinusOne = Laurent::uPow(1) - Laurent::one();
  UFraction acc{Laurent(), 0};
  for (Elt z : sub.finiteParabolic(sub.fullMask(), cap)) {
    if (!inv.isTwisted(z)) {
      continue;
    }
    int phi = inv.phi(z);
    acc = acc + UFraction{Laurent::uPow(sub.length(z)) *
                              laurentPow(uMinusOne, phi),
                          phi};
  }
  return acc;
}

CosetTable::CosetTable(RTable& table, Mask k, int maxLen, std::size_t cap)
    : d_table(table), d_cap(cap) {
  d_cosets = starStableCosets(d_table.system(), d_table.involutions(), k,
                              maxLen, cap);
}

const std::vector<CosetTable::Elt>& CosetTable::members(std::size_t i) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_members.find(i);
  if (it != d_members.end()) {
    return it->second;
  }
  return d_members.emplace(i, d_cosets[i].twistedMembers(d_cap))
      .first->second;
}

Laurent CosetTable::r(std::size_t iPrime, std::size_t i) {
  CoxeterSystem& W = system();
  Elt dPrime = d_cosets[iPrime].maximal();
  int dLen = W.length(d_cosets[i].maximal());
  Laurent out;
  for (Elt x : members(i)) {
    if (!W.bruhatLeq(dPrime, x)) {
      continue;
    }
    out += d_table.r(dPrime, x).shifted(W.length(x) - dLen);
  }
  return out;
}

Laurent CosetTable::pi(std::size_t iPrime, std::size_t i) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_pi.find(i);
  if (it == d_pi.end()) {
    CoxeterSystem& W = system();
    Elt top = d_cosets[i].maximal();
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < d_cosets.size(); ++j) {
      if (W.bruhatLeq(d_cosets[j].maximal(), top)) {
        order.push_back(j);
      }
    }
    std::sort(order.begin(), order.end(),
              [this, &W](std::size_t a, std::size_t b) {
                return W.before(d_cosets[b].maximal(),
                                d_cosets[a].maximal());
              });
    std::map<std::size_t, Laurent> column = solveBarTriangle(
        order,
        [this](std::size_t a, std::size_t b) { return r(a, b); });
    it = d_pi.emplace(i, std::move(column)).first;
  }
  auto entry = it->second.find(iPrime);
  return entry == it->second.end() ? Laurent() : entry->second;
}

MElt CosetTable::canonicalElement(std::size_t i) {
  CoxeterSystem& W = system();
  MElt out;
  for (std::size_t j = 0; j < d_cosets.size(); ++j) {
    Laurent c = pi(j, i);
    if (c.isZero()) {
      continue;
    }
    c = c.shifted(-W.length(d_cosets[j].maximal()));
    for (Elt x : members(j)) {
      mAddTerm(out, x, c);
    }
  }
  return out;
}

}  // namespace ivh
