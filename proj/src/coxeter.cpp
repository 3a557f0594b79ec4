/*
  This is coxeter.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/coxeter.h"

#include <algorithm>
#include <set>

namespace ivh {

namespace {

std::vector<int> finiteLargeBonds(const std::vector<std::vector<int>>& m) {
  std::vector<int> out;
  for (std::size_t s = 0; s < m.size(); ++s)
    for (std::size_t t = s + 1; t < m.size(); ++t)
      if (m[s][t] >= 4)
        out.push_back(m[s][t]);
  return out;
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> labels,
                             std::vector<std::vector<int>> matrix,
                             std::vector<int> star)
    : d_labels(std::move(labels)),
      d_matrix(std::move(matrix)),
      d_star(std::move(star)),
      d_ring(finiteLargeBonds(d_matrix)) {
  std::size_t n = d_labels.size();
  if (n == 0 || n >= 32)
    throw DomainError("CoxeterSystem: rank must be between 1 and 31");
  for (std::size_t s = 0; s < n; ++s)
    if (d_labels[s].empty())
      throw DomainError("CoxeterSystem: empty generator label");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t)
      if (d_labels[s] == d_labels[t])
        throw DomainError("CoxeterSystem: duplicate generator label");
  if (d_matrix.size() != n)
    throw DomainError("CoxeterSystem: matrix size mismatch");
  for (std::size_t s = 0; s < n; ++s) {
    if (d_matrix[s].size() != n)
      throw DomainError("CoxeterSystem: matrix row size mismatch");
    if (d_matrix[s][s] != 1)
      throw DomainError("CoxeterSystem: diagonal entries must be 1");
    for (std::size_t t = 0; t < n; ++t) {
      if (d_matrix[s][t] != d_matrix[t][s])
        throw DomainError("CoxeterSystem: matrix must be symmetric");
      if (s != t && d_matrix[s][t] != 0 && d_matrix[s][t] < 2)
        throw DomainError("CoxeterSystem: off-diagonal entries must be >= 2");
    }
  }
  if (d_star.size() != n)
    throw DomainError("CoxeterSystem: star permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    int im = d_star[s];
    if (im < 0 || im >= static_cast<int>(n))
      throw DomainError("CoxeterSystem: star image out of range");
    if (seen[static_cast<std::size_t>(im)])
      throw DomainError("CoxeterSystem: star is not a permutation");
    seen[static_cast<std::size_t>(im)] = true;
  }
  for (std::size_t s = 0; s < n; ++s)
    if (d_star[static_cast<std::size_t>(d_star[s])] != static_cast<int>(s))
      throw DomainError("CoxeterSystem: star is not an involution");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (d_matrix[static_cast<std::size_t>(d_star[s])]
                  [static_cast<std::size_t>(d_star[t])] != d_matrix[s][t])
        throw DomainError("CoxeterSystem: star does not preserve the matrix");

  d_cartan.assign(n, std::vector<GeomRing::Elt>(n, d_ring.zero()));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (s != t)
        d_cartan[s][t] = d_ring.bondValue(d_matrix[s][t]);

  intern(Word());
}

/* --- the geometric representation ------------------------------------- */

CoxeterSystem::RootV CoxeterSystem::unitRoot(int s) const {
  RootV x(static_cast<std::size_t>(rank()), d_ring.zero());
  x[static_cast<std::size_t>(s)] = d_ring.integer(1);
  return x;
}

void CoxeterSystem::reflect(RootV& x, int s) const {
  // sigma_s changes only the s-coordinate: x_s -> -x_s + sum_t c_{st} x_t
  GeomRing::Elt acc = d_ring.neg(x[static_cast<std::size_t>(s)]);
  for (int t = 0; t < rank(); ++t) {
    if (t == s || d_ring.isZero(x[static_cast<std::size_t>(t)]))
      continue;
    d_ring.addInto(acc,
                   d_ring.mul(d_cartan[static_cast<std::size_t>(s)]
                                      [static_cast<std::size_t>(t)],
                              x[static_cast<std::size_t>(t)]));
  }
  x[static_cast<std::size_t>(s)] = std::move(acc);
}

bool CoxeterSystem::rootEqualsUnit(const RootV& x, int s) const {
  for (int t = 0; t < rank(); ++t) {
    const GeomRing::Elt& c = x[static_cast<std::size_t>(t)];
    if (t == s) {
      GeomRing::Elt d = c;
      d_ring.subInto(d, d_ring.integer(1));
      if (!d_ring.isZero(d))
        return false;
    } else if (!d_ring.isZero(c)) {
      return false;
    }
  }
  return true;
}

int CoxeterSystem::rootSign(const RootV& x) const {
  int sgn = 0;
  for (const GeomRing::Elt& c : x) {
    int cs = d_ring.sign(c);
    if (cs == 0)
      continue;
    if (sgn == 0)
      sgn = cs;
    else if (sgn != cs)
      throw InternalError("rootSign: root with mixed-sign coordinates");
  }
  if (sgn == 0)
    throw InternalError("rootSign: zero vector is not a root");
  return sgn;
}

bool CoxeterSystem::wordLeftDescent(const Word& w, int s) const {
  // s is a left descent iff w^{-1}(alpha_s) is negative
  RootV x = unitRoot(s);
  for (char c : w)
    reflect(x, static_cast<int>(static_cast<unsigned char>(c)));
  return rootSign(x) < 0;
}

bool CoxeterSystem::wordRightDescent(const Word& w, int s) const {
  // s is a right descent iff w(alpha_s) is negative
  RootV x = unitRoot(s);
  for (std::size_t i = w.size(); i-- > 0;)
    reflect(x, static_cast<int>(static_cast<unsigned char>(w[i])));
  return rootSign(x) < 0;
}

CoxeterSystem::Word CoxeterSystem::exchangeLeft(const Word& w, int s) const {
  RootV x = unitRoot(s);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int r = static_cast<int>(static_cast<unsigned char>(w[i]));
    if (rootEqualsUnit(x, r)) {
      Word out = w;
      out.erase(out.begin() + static_cast<long>(i));
      return out;
    }
    reflect(x, r);
  }
  throw InternalError("exchangeLeft: no deletion point found");
}

CoxeterSystem::Word CoxeterSystem::exchangeRight(const Word& w, int s) const {
  RootV x = unitRoot(s);
  for (std::size_t i = w.size(); i-- > 0;) {
    int r = static_cast<int>(static_cast<unsigned char>(w[i]));
    if (rootEqualsUnit(x, r)) {
      Word out = w;
      out.erase(out.begin() + static_cast<long>(i));
      return out;
    }
    reflect(x, r);
  }
  throw InternalError("exchangeRight: no deletion point found");
}

CoxeterSystem::Word CoxeterSystem::canonicalize(Word w) const {
  /*
    Peel the smallest left descent repeatedly; the result is the
    lexicographically least reduced word of the element. The input must be
    reduced (all internal callers guarantee it).
  */
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    int chosen = -1;
    for (int s = 0; s < rank(); ++s)
      if (wordLeftDescent(w, s)) {
        chosen = s;
        break;
      }
    if (chosen < 0)
      throw InternalError("canonicalize: nonempty word with no descent");
    out.push_back(static_cast<char>(chosen));
    w = exchangeLeft(w, chosen);
  }
  return out;
}

/* --- the element registry --------------------------------------------- */

CoxeterSystem::Elt CoxeterSystem::intern(const Word& canonical) {
  auto it = d_index.find(canonical);
  if (it != d_index.end())
    return it->second;
  Node node;
  node.d_word = canonical;
  node.d_inverse = kNone;
  node.d_star = kNone;
  node.d_ldesc = kNoMask;
  node.d_rdesc = kNoMask;
  node.d_left.assign(static_cast<std::size_t>(rank()), kNone);
  node.d_right.assign(static_cast<std::size_t>(rank()), kNone);
  Elt idx = static_cast<Elt>(d_nodes.size());
  d_nodes.push_back(std::move(node));
  d_index.emplace(canonical, idx);
  return idx;
}

CoxeterSystem::Word CoxeterSystem::wordOf(Elt w) const {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return d_nodes[static_cast<std::size_t>(w)].d_word;
}

int CoxeterSystem::length(Elt w) const {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return static_cast<int>(d_nodes[static_cast<std::size_t>(w)].d_word.size());
}

CoxeterSystem::Elt CoxeterSystem::generator(int s) {
  if (s < 0 || s >= rank())
    throw DomainError("generator: index out of range");
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return intern(Word(1, static_cast<char>(s)));
}

CoxeterSystem::Elt CoxeterSystem::fromLetters(const Word& letters) {
  Elt e = kIdentity;
  for (char c : letters) {
    int s = static_cast<int>(static_cast<unsigned char>(c));
    if (s < 0 || s >= rank())
      throw DomainError("fromLetters: letter out of range");
    e = rightMul(e, s);
  }
  return e;
}

CoxeterSystem::Elt CoxeterSystem::leftMul(int s, Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  Elt cached = d_nodes[static_cast<std::size_t>(w)].d_left
                   [static_cast<std::size_t>(s)];
  if (cached != kNone)
    return cached;
  const Word word = d_nodes[static_cast<std::size_t>(w)].d_word;
  Word next;
  if (wordLeftDescent(word, s))
    next = canonicalize(exchangeLeft(word, s));
  else
    next = canonicalize(Word(1, static_cast<char>(s)) + word);
  Elt r = intern(next);
  d_nodes[static_cast<std::size_t>(w)].d_left[static_cast<std::size_t>(s)] = r;
  d_nodes[static_cast<std::size_t>(r)].d_left[static_cast<std::size_t>(s)] = w;
  return r;
}

CoxeterSystem::Elt CoxeterSystem::rightMul(Elt w, int s) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  Elt cached = d_nodes[static_cast<std::size_t>(w)].d_right
                   [static_cast<std::size_t>(s)];
  if (cached != kNone)
    return cached;
  const Word word = d_nodes[static_cast<std::size_t>(w)].d_word;
  Word next;
  if (wordRightDescent(word, s))
    next = canonicalize(exchangeRight(word, s));
  else
    next = canonicalize(word + static_cast<char>(s));
  Elt r = intern(next);
  d_nodes[static_cast<std::size_t>(w)].d_right[static_cast<std::size_t>(s)] =
      r;
  d_nodes[static_cast<std::size_t>(r)].d_right[static_cast<std::size_t>(s)] =
      w;
  return r;
}

CoxeterSystem::Elt CoxeterSystem::mul(Elt a, Elt b) {
  const Word wb = wordOf(b);
  Elt r = a;
  for (char c : wb)
    r = rightMul(r, static_cast<int>(static_cast<unsigned char>(c)));
  return r;
}

CoxeterSystem::Elt CoxeterSystem::inverse(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  Elt cached = d_nodes[static_cast<std::size_t>(w)].d_inverse;
  if (cached != kNone)
    return cached;
  Word word = d_nodes[static_cast<std::size_t>(w)].d_word;
  std::reverse(word.begin(), word.end());
  Elt r = intern(canonicalize(word));
  d_nodes[static_cast<std::size_t>(w)].d_inverse = r;
  d_nodes[static_cast<std::size_t>(r)].d_inverse = w;
  return r;
}

CoxeterSystem::Elt CoxeterSystem::star(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  Elt cached = d_nodes[static_cast<std::size_t>(w)].d_star;
  if (cached != kNone)
    return cached;
  Word word = d_nodes[static_cast<std::size_t>(w)].d_word;
  for (char& c : word)
    c = static_cast<char>(
        d_star[static_cast<std::size_t>(static_cast<unsigned char>(c))]);
  Elt r = intern(canonicalize(word));
  d_nodes[static_cast<std::size_t>(w)].d_star = r;
  d_nodes[static_cast<std::size_t>(r)].d_star = w;
  return r;
}

bool CoxeterSystem::isLeftDescent(int s, Elt w) {
  return (leftDescentMask(w) >> s) & 1u;
}

bool CoxeterSystem::isRightDescent(Elt w, int s) {
  return (rightDescentMask(w) >> s) & 1u;
}

std::uint32_t CoxeterSystem::leftDescentMask(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  std::uint32_t& mask = d_nodes[static_cast<std::size_t>(w)].d_ldesc;
  if (mask != kNoMask)
    return mask;
  const Word word = d_nodes[static_cast<std::size_t>(w)].d_word;
  std::uint32_t m = 0;
  for (int s = 0; s < rank(); ++s)
    if (wordLeftDescent(word, s))
      m |= (1u << s);
  mask = m;
  return m;
}

std::uint32_t CoxeterSystem::rightDescentMask(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  std::uint32_t& mask = d_nodes[static_cast<std::size_t>(w)].d_rdesc;
  if (mask != kNoMask)
    return mask;
  const Word word = d_nodes[static_cast<std::size_t>(w)].d_word;
  std::uint32_t m = 0;
  for (int s = 0; s < rank(); ++s)
    if (wordRightDescent(word, s))
      m |= (1u << s);
  mask = m;
  return m;
}

/* --- Bruhat order ------------------------------------------------------ */

bool CoxeterSystem::bruhatLeq(Elt y, Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return bruhatLeqLocked(y, w);
}

bool CoxeterSystem::bruhatLeqLocked(Elt y, Elt w) {
  if (y == kIdentity || y == w)
    return true;
  if (length(y) >= length(w))
    return false;
  std::uint64_t key =
      (static_cast<std::uint64_t>(y) << 32) | static_cast<std::uint64_t>(w);
  auto it = d_bruhat.find(key);
  if (it != d_bruhat.end())
    return it->second > 0;
  /*
    Lifting along the smallest left descent s of w (the first letter of the
    canonical word): with sw < w, y <= w iff sy <= sw when sy < y, and
    y <= sw otherwise.
  */
  int s = static_cast<int>(static_cast<unsigned char>(
      d_nodes[static_cast<std::size_t>(w)].d_word[0]));
  Elt sw = leftMul(s, w);
  bool res;
  if (isLeftDescent(s, y))
    res = bruhatLeqLocked(leftMul(s, y), sw);
  else
    res = bruhatLeqLocked(y, sw);
  d_bruhat.emplace(key, res ? 1 : -1);
  return res;
}

/* --- enumeration -------------------------------------------------------- */

std::vector<CoxeterSystem::Elt> CoxeterSystem::enumerate(int maxLen,
                                                         std::size_t cap) {
  return enumerateParabolic(fullMask(), maxLen, cap);
}

std::vector<CoxeterSystem::Elt> CoxeterSystem::enumerateParabolic(
    std::uint32_t K, int maxLen, std::size_t cap) {
  std::vector<Elt> out{kIdentity};
  std::vector<Elt> level{kIdentity};
  int len = 0;
  while (!level.empty() && len < maxLen) {
    std::set<Elt> next;
    for (Elt w : level)
      for (int s = 0; s < rank(); ++s)
        if (((K >> s) & 1u) && !isLeftDescent(s, w))
          next.insert(leftMul(s, w));
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), [this](Elt a, Elt b) {
      return wordOf(a) < wordOf(b);
    });
    if (out.size() + level.size() > cap)
      throw LimitError("enumerate: element cap exceeded");
    out.insert(out.end(), level.begin(), level.end());
    ++len;
  }
  return out;
}

bool CoxeterSystem::parabolicIsFinite(std::uint32_t K, std::size_t cap,
                                      std::vector<Elt>* elements) {
  std::vector<Elt> out{kIdentity};
  std::vector<Elt> level{kIdentity};
  while (!level.empty()) {
    std::set<Elt> next;
    for (Elt w : level)
      for (int s = 0; s < rank(); ++s)
        if (((K >> s) & 1u) && !isLeftDescent(s, w))
          next.insert(leftMul(s, w));
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), [this](Elt a, Elt b) {
      return wordOf(a) < wordOf(b);
    });
    if (out.size() + level.size() > cap)
      return false;
    out.insert(out.end(), level.begin(), level.end());
  }
  if (elements != nullptr)
    *elements = std::move(out);
  return true;
}

std::vector<CoxeterSystem::Elt> CoxeterSystem::finiteParabolic(
    std::uint32_t K, std::size_t cap) {
  std::vector<Elt> all;
  if (!parabolicIsFinite(K, cap, &all))
    throw DomainError("finiteParabolic: subgroup not finite within cap");
  return all;
}

CoxeterSystem::Elt CoxeterSystem::longestElement(std::uint32_t K,
                                                 std::size_t cap) {
  std::vector<Elt> all = finiteParabolic(K, cap);
  Elt best = kIdentity;
  for (Elt w : all)
    if (length(w) > length(best))
      best = w;
  // sanity: the longest element of a finite parabolic is unique
  for (Elt w : all)
    if (w != best && length(w) == length(best))
      throw InternalError("longestElement: maximal length not unique");
  return best;
}

bool CoxeterSystem::before(Elt a, Elt b) const {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  const Word& wa = d_nodes[static_cast<std::size_t>(a)].d_word;
  const Word& wb = d_nodes[static_cast<std::size_t>(b)].d_word;
  if (wa.size() != wb.size())
    return wa.size() < wb.size();
  return wa < wb;
}

void CoxeterSystem::sortElements(std::vector<Elt>& v) const {
  std::sort(v.begin(), v.end(),
            [this](Elt a, Elt b) { return before(a, b); });
}

}  // namespace ivh
