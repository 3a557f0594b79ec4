/*
  This is ivhecke.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

/*
  Command-line front end. Every command loads a system descriptor (JSON
  with labels, Coxeter matrix and star permutation, see systems/) and
  walks the twisted involutions up to --maxlen.

  Commands:

    enumerate            group elements, or twisted involutions (--twisted)
    bar WORD             bar of a basis element, as a module vector
    rpoly                table of the bar expansion polynomials r
    ppm, kl              polynomial table: split, classical, both halves
    basis WORD           canonical basis element, as a module vector
    cosets LABELS        star-stable double coset reports for K = {labels}
    verify SUITE         identity checks; suites below
    scan-8-4             compare split against classical at -u, per coset pair
    check-8-6            closed form of the column through the affine letter

  Verification suites: module-axioms, bar, rpoly, canonical, spherical,
  sixthree, inversion, mod2, all. A failing check reports the first
  violated identity with its operands and exits with 1.

  Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
  Exports are deterministic: rows sorted by (length, word), fixed key
  order, so identical invocations produce identical bytes.
*/

#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ivhecke/affine.h"
#include "ivhecke/canonical.h"
#include "ivhecke/classical.h"
#include "ivhecke/cosets.h"
#include "ivhecke/coxeter.h"
#include "ivhecke/duality.h"
#include "ivhecke/error.h"
#include "ivhecke/hecke.h"
#include "ivhecke/involution.h"
#include "ivhecke/io.h"
#include "ivhecke/laurent.h"
#include "ivhecke/mod2model.h"
#include "ivhecke/rpoly.h"
#include "ivhecke/spherical.h"
#include "ivhecke/tablefill.h"

using namespace ivh;

namespace {

using Elt = CoxeterSystem::Elt;
using Mask = std::uint32_t;

// Finiteness probes stay below this cap so that an infinite group is
// detected quickly instead of flooding the registry with long words.
constexpr std::size_t kProbeCap = 1u << 10;

struct Options {
  std::string d_system;
  std::string d_star;
  std::string d_out;
  std::string d_format;
  std::string d_word;
  std::string d_subset;
  std::string d_suite;
  int d_maxLen = 8;
  int d_affineGen = 0;
  std::size_t d_cap = 1u << 20;
  bool d_twisted = false;
};

struct Pipeline {
  std::unique_ptr<CoxeterSystem> d_system;
  std::unique_ptr<Involutions> d_involutions;
  std::unique_ptr<HeckeModule> d_module;
  std::unique_ptr<RTable> d_r;
  std::unique_ptr<CanonicalBasis> d_basis;
  std::unique_ptr<KLTable> d_classical;
  std::unique_ptr<Mod2Model> d_mod2;
  std::unique_ptr<Spherical> d_spherical;
  std::unique_ptr<TableFill> d_fill;

  explicit Pipeline(std::unique_ptr<CoxeterSystem> system)
      : d_system(std::move(system)),
        d_involutions(new Involutions(*d_system)),
        d_module(new HeckeModule(*d_system, *d_involutions)),
        d_r(new RTable(*d_module)),
        d_basis(new CanonicalBasis(*d_r)),
        d_classical(new KLTable(*d_system)),
        d_mod2(new Mod2Model(*d_system, *d_involutions)),
        d_spherical(new Spherical(*d_module)),
        d_fill(new TableFill(*d_basis, *d_classical)) {}

  CoxeterSystem& W() { return *d_system; }
  Involutions& I() { return *d_involutions; }
  HeckeModule& M() { return *d_module; }
  RTable& R() { return *d_r; }
  CanonicalBasis& C() { return *d_basis; }
  KLTable& K() { return *d_classical; }
};

Pipeline makePipeline(const Options& opt) {
  SystemDescriptor desc = readDescriptor(opt.d_system);
  if (!opt.d_star.empty()) {
    desc.d_star =
        parseStar(opt.d_star, static_cast<int>(desc.d_labels.size()));
  }
  return Pipeline(desc.build());
}

void emit(const Options& opt, std::string text) {
  if (text.empty() || text.back() != '\n') {
    text += '\n';
  }
  if (opt.d_out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    writeText(opt.d_out, text);
  }
}

std::string pickFormat(const Options& opt, const char* fallback) {
  std::string format = opt.d_format.empty() ? fallback : opt.d_format;
  if (format != "json" && format != "csv") {
    throw DomainError("format: expected json or csv");
  }
  return format;
}

void requireJsonOnly(const Options& opt, const char* command) {
  if (!opt.d_format.empty() && opt.d_format != "json") {
    throw DomainError(std::string(command) + ": only json output is defined");
  }
}

Mask parseSubset(CoxeterSystem& system, const std::string& text) {
  Mask k = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string label = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    int found = -1;
    for (int s = 0; s < system.rank(); ++s) {
      if (system.label(s) == label) {
        found = s;
        break;
      }
    }
    if (found < 0) {
      throw DomainError("subset: unknown generator label '" + label + "'");
    }
    k |= Mask{1} << found;
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return k;
}

Elt parseTwistedWord(Pipeline& p, const std::string& text) {
  Elt w = parseWord(p.W(), text);
  if (!p.I().isTwisted(w)) {
    throw DomainError("word: '" + text + "' is not a twisted involution");
  }
  return w;
}

/*
  A reporter counts checks, keeps the first failure in full, and carries
  side notes (for parts a suite skips on this system). Details are built
  lazily so passing checks cost nothing.
*/
struct Reporter {
  long long d_checks = 0;
  bool d_ok = true;
  std::string d_detail;
  std::vector<std::string> d_notes;

  template <class F>
  void check(bool ok, F detail) {
    ++d_checks;
    if (!ok && d_ok) {
      d_ok = false;
      d_detail = detail();
    }
  }
};

std::string showWord(CoxeterSystem& system, Elt w) {
  return "'" + formatWord(system, w) + "'";
}

std::string showVec(CoxeterSystem& system, const MElt& m) {
  return moduleVectorToJson(system, m);
}

// ---------------------------------------------------------------- suites

void suiteModuleAxioms(Pipeline& p, const Options& opt, Reporter& rep) {
  const Laurent uu = Laurent::uPow(2);
  const Laurent one = Laurent::one();
  for (Elt w : p.I().all(opt.d_maxLen, opt.d_cap)) {
    for (int s = 0; s < p.W().rank(); ++s) {
      MElt ts = p.M().tsAction(s, HeckeModule::basis(w));
      MElt lhs = p.M().tsAction(s, ts);
      MElt rhs;
      mAddScaled(rhs, uu - one, ts);
      mAddScaled(rhs, uu, HeckeModule::basis(w));
      rep.check(mEq(lhs, rhs), [&] {
        return "quadratic relation at w=" + showWord(p.W(), w) +
               ", s=" + p.W().label(s) + "\n  T_s T_s a_w = " +
               showVec(p.W(), lhs) + "\n  (u^2-1) T_s a_w + u^2 a_w = " +
               showVec(p.W(), rhs);
      });
    }
    for (int s = 0; s < p.W().rank(); ++s) {
      for (int t = s + 1; t < p.W().rank(); ++t) {
        int m = p.W().bond(s, t);
        if (m == 0) {
          continue;  // infinite bond, no relation
        }
        MElt lhs = HeckeModule::basis(w);
        MElt rhs = HeckeModule::basis(w);
        for (int i = m - 1; i >= 0; --i) {
          lhs = p.M().tsAction(i % 2 == 0 ? s : t, lhs);
          rhs = p.M().tsAction(i % 2 == 0 ? t : s, rhs);
        }
        rep.check(mEq(lhs, rhs), [&] {
          return "braid relation at w=" + showWord(p.W(), w) + ", s=" +
                 p.W().label(s) + ", t=" + p.W().label(t) + ", m=" +
                 std::to_string(m) + "\n  (T_s T_t ...) a_w = " +
                 showVec(p.W(), lhs) + "\n  (T_t T_s ...) a_w = " +
                 showVec(p.W(), rhs);
        });
      }
    }
  }
}

void suiteBar(Pipeline& p, const Options& opt, Reporter& rep) {
  for (Elt w : p.I().all(opt.d_maxLen, opt.d_cap)) {
    MElt a = HeckeModule::basis(w);
    MElt barred = p.M().bar(a);
    MElt twice = p.M().bar(barred);
    rep.check(mEq(twice, a), [&] {
      return "bar is not an involution at w=" + showWord(p.W(), w) +
             "\n  bar(bar(a_w)) = " + showVec(p.W(), twice);
    });
    for (int s = 0; s < p.W().rank(); ++s) {
      MElt lhs = p.M().bar(p.M().tsAction(s, a));
      MElt rhs = p.M().tsInverseAction(s, barred);
      rep.check(mEq(lhs, rhs), [&] {
        return "bar does not twist the action at w=" + showWord(p.W(), w) +
               ", s=" + p.W().label(s) + "\n  bar(T_s a_w) = " +
               showVec(p.W(), lhs) + "\n  T_s^{-1} bar(a_w) = " +
               showVec(p.W(), rhs);
      });
    }
  }
}

bool inNegEvenPart(const Laurent& q) {
  if (q.isZero()) {
    return true;
  }
  if (q.maxExp() > 0) {
    return false;
  }
  for (int e = q.minExp(); e <= q.maxExp(); ++e) {
    if (!(q.coeff(e) == 0) && e % 2 != 0) {
      return false;
    }
  }
  return true;
}

void suiteRPoly(Pipeline& p, const Options& opt, Reporter& rep) {
  std::vector<Elt> tw = p.I().all(opt.d_maxLen, opt.d_cap);
  for (Elt w : tw) {
    for (Elt y : tw) {
      Laurent direct = p.R().r(y, w);
      Laurent recursed = p.R().rByRecursion(y, w);
      rep.check(direct == recursed, [&] {
        return "extraction and recursion disagree at y=" +
               showWord(p.W(), y) + ", w=" + showWord(p.W(), w) +
               "\n  extracted = " + direct.toString() +
               "\n  recursion = " + recursed.toString();
      });
      if (direct.isZero()) {
        rep.check(!p.W().bruhatLeq(y, w), [&] {
          return "r vanishes inside the interval at y=" + showWord(p.W(), y) +
                 ", w=" + showWord(p.W(), w);
        });
        continue;
      }
      int shift = p.W().length(y) - p.W().length(w);
      Laurent rPrime = direct.shifted(shift);
      Laurent rSecond = direct.bar().shifted(shift);
      bool shape = p.W().bruhatLeq(y, w) && inNegEvenPart(rPrime) &&
                   inNegEvenPart(rSecond) && rPrime.coeff(0) == 1 &&
                   rSecond.coeff(0) == p.I().kappa(y) * p.I().kappa(w);
      rep.check(shape, [&] {
        return "r shape fails at y=" + showWord(p.W(), y) + ", w=" +
               showWord(p.W(), w) + "\n  r = " + direct.toString();
      });
    }
  }
  for (Elt x : tw) {
    for (Elt z : tw) {
      if (!p.W().bruhatLeq(x, z)) {
        continue;
      }
      Laurent sum;
      for (Elt y : tw) {
        if (p.W().bruhatLeq(x, y) && p.W().bruhatLeq(y, z)) {
          sum += p.R().r(x, y).bar() * p.R().r(y, z);
        }
      }
      Laurent expected = x == z ? Laurent::one() : Laurent();
      rep.check(sum == expected, [&] {
        return "orthogonality fails at x=" + showWord(p.W(), x) + ", z=" +
               showWord(p.W(), z) + "\n  sum bar(r_{x,y}) r_{y,z} = " +
               sum.toString();
      });
    }
  }
}

void suiteCanonical(Pipeline& p, const Options& opt, Reporter& rep) {
  std::vector<Elt> tw = p.I().all(opt.d_maxLen, opt.d_cap);
  for (Elt w : tw) {
    MElt a = p.C().aBasis(w);
    MElt barred = p.M().bar(a);
    rep.check(mEq(barred, a), [&] {
      return "canonical element is not bar fixed at w=" + showWord(p.W(), w) +
             "\n  A_w      = " + showVec(p.W(), a) + "\n  bar(A_w) = " +
             showVec(p.W(), barred);
    });
    for (Elt y : tw) {
      Laurent split = p.C().pPM(y, w);
      if (!p.W().bruhatLeq(y, w)) {
        rep.check(split.isZero(), [&] {
          return "nonzero split polynomial outside the interval at y=" +
                 showWord(p.W(), y) + ", w=" + showWord(p.W(), w);
        });
        continue;
      }
      bool shape = split.isUPolynomial() && split.coeff(0) == 1 &&
                   (y == w ? split == Laurent::one()
                           : p.C().pi(y, w).maxExp() <= -1);
      rep.check(shape, [&] {
        return "split polynomial shape fails at y=" + showWord(p.W(), y) +
               ", w=" + showWord(p.W(), w) + "\n  Ppm = " + split.toString();
      });

      // the bar fixed point identity of the coefficients
      Laurent sum;
      for (Elt z : tw) {
        if (p.W().bruhatLeq(y, z) && p.W().bruhatLeq(z, w)) {
          sum += p.R().r(y, z) * p.C().pi(z, w);
        }
      }
      Laurent expected = p.C().pi(y, w).bar();
      rep.check(sum == expected, [&] {
        return "fixed point identity fails at y=" + showWord(p.W(), y) +
               ", w=" + showWord(p.W(), w) + "\n  sum r_{y,z} pi_{z,w} = " +
               sum.toString() + "\n  bar(pi_{y,w})        = " +
               expected.toString();
      });
    }
  }
  // kappa is the Moebius function of the twisted set
  for (Elt x : tw) {
    for (Elt z : tw) {
      if (!p.W().bruhatLeq(x, z)) {
        continue;
      }
      long long sum = 0;
      for (Elt y : tw) {
        if (p.W().bruhatLeq(x, y) && p.W().bruhatLeq(y, z)) {
          sum += p.I().kappa(x) * p.I().kappa(y);
        }
      }
      rep.check(sum == (x == z ? 1 : 0), [&] {
        return "Moebius sum fails at x=" + showWord(p.W(), x) + ", z=" +
               showWord(p.W(), z) + "\n  sum = " + std::to_string(sum);
      });
    }
  }
}

void suiteSpherical(Pipeline& p, const Options& opt, Reporter& rep) {
  for (Elt w : p.I().all(opt.d_maxLen, opt.d_cap)) {
    for (int s = 0; s < p.W().rank(); ++s) {
      Mask k = Mask{1} << s;
      MElt image = p.d_spherical->sigma(k, HeckeModule::basis(w), opt.d_cap);
      rep.check(p.d_spherical->isSpherical(image, k), [&] {
        return "summation image is not spherical at w=" + showWord(p.W(), w) +
               ", K={" + p.W().label(s) + "}\n  Sigma a_w = " +
               showVec(p.W(), image);
      });
    }
  }
  Mask full = p.W().fullMask();
  if (p.W().parabolicIsFinite(full, kProbeCap)) {
    UFraction lhs =
        p.d_spherical->twistedSeries(full, opt.d_cap) *
        UFraction{p.d_spherical->poincareStarFixed(full, opt.d_cap), 0};
    UFraction rhs =
        UFraction{p.d_spherical->poincare(full, opt.d_cap).stretched(), 0};
    rep.check(lhs == rhs, [&] {
      return std::string("series factorization fails") + "\n  lhs num = " +
             lhs.d_num.toString() + " over (u+1)^" +
             std::to_string(lhs.d_denPow) + "\n  rhs num = " +
             rhs.d_num.toString() + " over (u+1)^" +
             std::to_string(rhs.d_denPow);
    });
  } else {
    rep.d_notes.push_back(
        "series factorization skipped: the group does not fit in the probe "
        "cap");
  }
}

void suiteSixThree(Pipeline& p, const Options& opt, Reporter& rep) {
  const Laurent vpv = Laurent::vPow(1) + Laurent::vPow(-1);
  const Laurent upu = Laurent::uPow(1) + Laurent::uPow(-1);
  std::vector<Elt> tw = p.I().all(opt.d_maxLen, opt.d_cap);
  for (Elt w : tw) {
    for (int s = 0; s < p.W().rank(); ++s) {
      std::map<Elt, Laurent> expansion =
          p.C().expandInABasis(p.C().csAction(s, p.C().aBasis(w)));
      Elt sw = p.W().leftMul(s, w);
      if (p.W().length(sw) < p.W().length(w)) {
        bool down = expansion.size() == 1 && expansion.count(w) == 1 &&
                    expansion.at(w) == upu;
        rep.check(down, [&] {
          return "descent case fails at w=" + showWord(p.W(), w) + ", s=" +
                 p.W().label(s) + "\n  expected (u+u^{-1}) A_w";
        });
        continue;
      }
      Elt top = p.I().dot(s, w);
      Laurent expectedTop =
          sw == p.W().rightMul(w, p.W().starGen(s)) ? vpv : Laurent::one();
      bool topOk = expansion.count(top) == 1 && expansion.at(top) == expectedTop;
      rep.check(topOk, [&] {
        return "leading term fails at w=" + showWord(p.W(), w) + ", s=" +
               p.W().label(s) + "\n  expected coefficient " +
               expectedTop.toString() + " on A_" + formatWord(p.W(), top);
      });
      for (const auto& entry : expansion) {
        if (entry.first == top) {
          continue;
        }
        Laurent predicted = p.C().csCoefficient(s, entry.first, w);
        bool termOk = p.W().isLeftDescent(s, entry.first) &&
                      p.W().bruhatLeq(entry.first, top) &&
                      entry.second == predicted;
        rep.check(termOk, [&] {
          return "lower term fails at w=" + showWord(p.W(), w) + ", s=" +
                 p.W().label(s) + ", z=" + showWord(p.W(), entry.first) +
                 "\n  coefficient = " + entry.second.toString() +
                 "\n  predicted   = " + predicted.toString();
        });
      }
      for (Elt z : tw) {
        if (z == top || z == w || !p.W().isLeftDescent(s, z) ||
            !p.W().bruhatLeq(z, top) || expansion.count(z) != 0) {
          continue;
        }
        Laurent predicted = p.C().csCoefficient(s, z, w);
        rep.check(predicted.isZero(), [&] {
          return "missing term at w=" + showWord(p.W(), w) + ", s=" +
                 p.W().label(s) + ", z=" + showWord(p.W(), z) +
                 "\n  predicted = " + predicted.toString();
        });
      }
    }
  }
}

void suiteInversion(Pipeline& p, const Options& opt, Reporter& rep) {
  DualityContext duality(p.R(), opt.d_cap);
  std::vector<Elt> tw =
      p.I().all(p.W().length(duality.longest()), opt.d_cap);
  for (Elt w : tw) {
    for (Elt y : tw) {
      rep.check(duality.rSymmetryHolds(y, w), [&] {
        return "bar symmetry fails at y=" + showWord(p.W(), y) + ", w=" +
               showWord(p.W(), w);
      });
      if (!p.W().bruhatLeq(y, w)) {
        continue;
      }
      Laurent sum = duality.inversionSum(y, w);
      Laurent expected = y == w ? Laurent::one() : Laurent();
      rep.check(sum == expected, [&] {
        return "inversion sum fails at y=" + showWord(p.W(), y) + ", w=" +
               showWord(p.W(), w) + "\n  sum = " + sum.toString();
      });
    }
  }
}

void suiteMod2(Pipeline& p, const Options& opt, Reporter& rep) {
  std::vector<Elt> tw = p.I().all(opt.d_maxLen, opt.d_cap);
  for (Elt w : tw) {
    Mod2Model::Vec viaAlgebra =
        p.d_mod2->barProjected(Mod2Model::basis(w));
    Mod2Model::Vec viaModule =
        Mod2Model::reduce(p.M().bar(HeckeModule::basis(w)));
    rep.check(viaAlgebra == viaModule, [&] {
      return "projected bar disagrees with the module bar at w=" +
             showWord(p.W(), w);
    });
    for (int s = 0; s < p.W().rank(); ++s) {
      Mod2Model::Vec actAlgebra = p.d_mod2->odot(s, Mod2Model::basis(w));
      Mod2Model::Vec actModule =
          Mod2Model::reduce(p.M().tsAction(s, HeckeModule::basis(w)));
      rep.check(actAlgebra == actModule, [&] {
        return "folded action disagrees with the module action at w=" +
               showWord(p.W(), w) + ", s=" + p.W().label(s);
      });
    }
    for (Elt y : tw) {
      rep.check(mod2(p.R().r(y, w)) == mod2(p.K().rho(y, w)), [&] {
        return "r and rho disagree mod 2 at y=" + showWord(p.W(), y) +
               ", w=" + showWord(p.W(), w) + "\n  r   = " +
               p.R().r(y, w).toString() + "\n  rho = " +
               p.K().rho(y, w).toString();
      });
      Laurent split = p.C().pPM(y, w);
      Laurent classical = p.K().klPolynomial(y, w);
      rep.check(mod2(split) == mod2(classical), [&] {
        return "split and classical polynomials disagree mod 2 at y=" +
               showWord(p.W(), y) + ", w=" + showWord(p.W(), w) +
               "\n  Ppm = " + split.toString() + "\n  P   = " +
               classical.toString();
      });
      if (p.W().bruhatLeq(y, w)) {
        Laurent plus = halfSum(classical, split);
        Laurent minus = halfDifference(classical, split);
        rep.check(plus.isUPolynomial() && minus.isUPolynomial() &&
                      plus + minus == classical && plus - minus == split,
                  [&] {
                    return "halves do not reconstruct the columns at y=" +
                           showWord(p.W(), y) + ", w=" + showWord(p.W(), w) +
                           "\n  Pplus  = " + plus.toString() +
                           "\n  Pminus = " + minus.toString();
                  });
      }
    }
  }
}

struct Suite {
  const char* d_name;
  void (*d_run)(Pipeline&, const Options&, Reporter&);
  bool d_needsFinite;
};

const Suite kSuites[] = {
    {"module-axioms", suiteModuleAxioms, false},
    {"bar", suiteBar, false},
    {"rpoly", suiteRPoly, false},
    {"canonical", suiteCanonical, false},
    {"spherical", suiteSpherical, false},
    {"sixthree", suiteSixThree, false},
    {"inversion", suiteInversion, true},
    {"mod2", suiteMod2, false},
};

int runVerify(const Options& opt) {
  bool known = opt.d_suite == "all";
  for (const Suite& suite : kSuites) {
    known = known || opt.d_suite == suite.d_name;
  }
  if (!known) {
    throw DomainError("verify: unknown suite '" + opt.d_suite + "'");
  }

  Pipeline p = makePipeline(opt);
  bool allFinite = p.W().parabolicIsFinite(p.W().fullMask(), kProbeCap);
  bool failed = false;
  for (const Suite& suite : kSuites) {
    if (opt.d_suite != "all" && opt.d_suite != suite.d_name) {
      continue;
    }
    if (suite.d_needsFinite && !allFinite) {
      if (opt.d_suite == suite.d_name) {
        throw DomainError(std::string(suite.d_name) +
                          ": the group must be finite");
      }
      std::printf("%s: skipped (the group is not finite)\n", suite.d_name);
      continue;
    }
    Reporter rep;
    suite.d_run(p, opt, rep);
    for (const std::string& note : rep.d_notes) {
      std::printf("%s: note: %s\n", suite.d_name, note.c_str());
    }
    if (rep.d_ok) {
      std::printf("%s: ok (%lld checks)\n", suite.d_name, rep.d_checks);
    } else {
      failed = true;
      std::printf("%s: FAIL\n  %s\n", suite.d_name, rep.d_detail.c_str());
    }
  }
  return failed ? 1 : 0;
}

// --------------------------------------------------------------- commands

int runEnumerate(const Options& opt) {
  Pipeline p = makePipeline(opt);
  std::vector<Elt> elements = opt.d_twisted
                                  ? p.I().all(opt.d_maxLen, opt.d_cap)
                                  : p.W().enumerate(opt.d_maxLen, opt.d_cap);
  p.W().sortElements(elements);
  std::string format = pickFormat(opt, "csv");
  emit(opt, format == "csv" ? elementsToCsv(p.W(), elements)
                            : elementsToJson(p.W(), elements));
  return 0;
}

int runBar(const Options& opt) {
  requireJsonOnly(opt, "bar");
  Pipeline p = makePipeline(opt);
  Elt w = parseTwistedWord(p, opt.d_word);
  emit(opt, moduleVectorToJson(p.W(), p.M().bar(HeckeModule::basis(w))));
  return 0;
}

int runBasis(const Options& opt) {
  requireJsonOnly(opt, "basis");
  Pipeline p = makePipeline(opt);
  Elt w = parseTwistedWord(p, opt.d_word);
  emit(opt, moduleVectorToJson(p.W(), p.C().aBasis(w)));
  return 0;
}

int runRPoly(const Options& opt) {
  Pipeline p = makePipeline(opt);
  std::vector<Elt> ws = p.d_fill->targets(opt.d_maxLen, opt.d_cap);
  std::string format = pickFormat(opt, "csv");

  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  std::string csv = "y,w,l_y,l_w,r\n";
  for (Elt w : ws) {
    const RTable::Column& column = p.R().column(w);
    std::vector<Elt> sources;
    for (const auto& entry : column) {
      sources.push_back(entry.first);
    }
    p.W().sortElements(sources);
    for (Elt y : sources) {
      if (format == "csv") {
        csv += formatWord(p.W(), y) + "," + formatWord(p.W(), w) + "," +
               std::to_string(p.W().length(y)) + "," +
               std::to_string(p.W().length(w)) + "," +
               p.R().r(y, w).toString() + "\n";
      } else {
        nlohmann::ordered_json item;
        item["y"] = formatWord(p.W(), y);
        item["w"] = formatWord(p.W(), w);
        item["l_y"] = p.W().length(y);
        item["l_w"] = p.W().length(w);
        item["r"] = p.R().r(y, w).toString();
        items.push_back(std::move(item));
      }
    }
  }
  if (format == "csv") {
    emit(opt, csv);
  } else {
    nlohmann::ordered_json out;
    out["rows"] = std::move(items);
    emit(opt, out.dump());
  }
  return 0;
}

int runTable(const Options& opt) {
  Pipeline p = makePipeline(opt);
  std::vector<TableRow> rows = p.d_fill->fillParallel(opt.d_maxLen, opt.d_cap);
  std::string format = pickFormat(opt, "csv");
  emit(opt, format == "csv" ? tableToCsv(p.W(), rows)
                            : tableToJson(p.W(), rows));
  return 0;
}

int runCosets(const Options& opt) {
  requireJsonOnly(opt, "cosets");
  Pipeline p = makePipeline(opt);
  Mask k = parseSubset(p.W(), opt.d_subset);
  std::vector<DoubleCoset> cosets =
      starStableCosets(p.W(), p.I(), k, opt.d_maxLen, opt.d_cap);
  emit(opt, cosetsToJson(cosets, opt.d_cap));
  return 0;
}

int runScan(const Options& opt) {
  Pipeline p = makePipeline(opt);
  AffineSetup setup(p.R(), opt.d_affineGen, opt.d_cap);
  std::vector<AffineSetup::ScanRow> rows = setup.scan(opt.d_maxLen);
  std::string format = pickFormat(opt, "csv");
  emit(opt, format == "csv" ? scanToCsv(p.W(), rows)
                            : scanToJson(p.W(), rows));
  return 0;
}

int runCheckClosedForm(const Options& opt) {
  requireJsonOnly(opt, "check-8-6");
  Pipeline p = makePipeline(opt);
  AffineSetup setup(p.R(), opt.d_affineGen, opt.d_cap);
  bool ok = setup.checkClosedForm();
  nlohmann::ordered_json out;
  out["exponents"] = setup.parabolicExponents();
  out["ok"] = ok;
  emit(opt, out.dump());
  return ok ? 0 : 1;
}

void addCommon(CLI::App* sub, Options& opt, bool withMaxLen = true) {
  sub->add_option("--system", opt.d_system, "system descriptor JSON file")
      ->required();
  sub->add_option("--star", opt.d_star,
                  "override the star permutation, e.g. 0,2,1");
  sub->add_option("--cap", opt.d_cap, "element registry bound");
  sub->add_option("--out", opt.d_out, "write the report to a file");
  sub->add_option("--format", opt.d_format, "output format: json or csv");
  if (withMaxLen) {
    sub->add_option("--maxlen", opt.d_maxLen, "length bound on the walk");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke-module structures on twisted involutions"};
  app.require_subcommand(1);
  Options opt;
  int rc = 0;

  CLI::App* enumerateCmd =
      app.add_subcommand("enumerate", "list group elements up to --maxlen");
  addCommon(enumerateCmd, opt);
  enumerateCmd->add_flag("--twisted", opt.d_twisted,
                         "list twisted involutions only");
  enumerateCmd->callback([&] { rc = runEnumerate(opt); });

  CLI::App* barCmd =
      app.add_subcommand("bar", "bar of a basis element, as a module vector");
  addCommon(barCmd, opt, false);
  barCmd->add_option("word", opt.d_word, "twisted involution, labels joined by '.'")
      ->required();
  barCmd->callback([&] { rc = runBar(opt); });

  CLI::App* rpolyCmd =
      app.add_subcommand("rpoly", "bar expansion polynomial table");
  addCommon(rpolyCmd, opt);
  rpolyCmd->callback([&] { rc = runRPoly(opt); });

  CLI::App* ppmCmd = app.add_subcommand(
      "ppm", "split polynomial table with the classical columns");
  addCommon(ppmCmd, opt);
  ppmCmd->callback([&] { rc = runTable(opt); });

  CLI::App* klCmd = app.add_subcommand(
      "kl", "the same polynomial table, classical columns first-class");
  addCommon(klCmd, opt);
  klCmd->callback([&] { rc = runTable(opt); });

  CLI::App* basisCmd = app.add_subcommand(
      "basis", "canonical basis element, as a module vector");
  addCommon(basisCmd, opt, false);
  basisCmd->add_option("word", opt.d_word,
                       "twisted involution, labels joined by '.'")
      ->required();
  basisCmd->callback([&] { rc = runBasis(opt); });

  CLI::App* cosetsCmd = app.add_subcommand(
      "cosets", "star-stable double coset reports for K = {labels}");
  addCommon(cosetsCmd, opt);
  cosetsCmd->add_option("subset", opt.d_subset,
                        "generator labels joined by ','")
      ->required();
  cosetsCmd->callback([&] { rc = runCosets(opt); });

  CLI::App* verifyCmd =
      app.add_subcommand("verify", "run an identity suite; FAIL exits 1");
  addCommon(verifyCmd, opt);
  verifyCmd->add_option("suite", opt.d_suite,
                        "module-axioms, bar, rpoly, canonical, spherical, "
                        "sixthree, inversion, mod2, or all")
      ->required();
  verifyCmd->callback([&] { rc = runVerify(opt); });

  CLI::App* scanCmd = app.add_subcommand(
      "scan-8-4", "split against classical at -u over coset pairs");
  addCommon(scanCmd, opt);
  scanCmd->add_option("--affine-gen", opt.d_affineGen,
                      "index of the affine generator");
  scanCmd->callback([&] { rc = runScan(opt); });

  CLI::App* checkCmd = app.add_subcommand(
      "check-8-6", "closed form of the column through the affine letter");
  addCommon(checkCmd, opt, false);
  checkCmd->add_option("--affine-gen", opt.d_affineGen,
                       "index of the affine generator");
  checkCmd->callback([&] { rc = runCheckClosedForm(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return rc;
}
