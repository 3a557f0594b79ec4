/*
  This is coxeter.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_COXETER_H
#define IVH_COXETER_H

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ivhecke/error.h"
#include "ivhecke/ring.h"

namespace ivh {

/*
  CoxeterSystem holds a Coxeter matrix over labelled generators together with
  a diagram involution (the star permutation), and interns group elements by
  their ShortLex-canonical reduced words. Elements are small integer handles
  into the registry; all group arithmetic is exact.

  Reduced-word bookkeeping rests on the geometric representation over the
  exact ring GeomRing: s is a left descent of w iff the walk of alpha_s
  through the word of w ends on a negative root, and the deleted letter in a
  length-reducing product is located by the exchange condition. Every root
  met on the way must be all-positive or all-negative in exact coordinates;
  a mixed sign raises InternalError, so no unsound configuration can return
  a wrong answer silently.

  Bond value 0 in the matrix encodes m = infinity.

  All mutating access to the registry is serialized by an internal mutex, so
  a fully warmed system can be shared by parallel readers and concurrent
  fills stay correct (if serialized) when they miss the caches.
*/
class CoxeterSystem {
public:
  using Elt = std::uint32_t;
  using Word = std::string;  // letters are byte values 0 .. rank-1

  static constexpr Elt kIdentity = 0;

  CoxeterSystem(std::vector<std::string> labels,
                std::vector<std::vector<int>> matrix,
                std::vector<int> star);

  int rank() const { return static_cast<int>(d_labels.size()); }
  const std::string& label(int s) const {
    return d_labels[static_cast<std::size_t>(s)];
  }
  int bond(int s, int t) const {
    return d_matrix[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  }
  int starGen(int s) const { return d_star[static_cast<std::size_t>(s)]; }
  const std::vector<int>& starPerm() const { return d_star; }

  Word wordOf(Elt w) const;
  int length(Elt w) const;
  Elt generator(int s);
  Elt fromLetters(const Word& letters);  // product of generators, any word

  Elt leftMul(int s, Elt w);
  Elt rightMul(Elt w, int s);
  Elt mul(Elt a, Elt b);
  Elt inverse(Elt w);
  Elt star(Elt w);

  bool isLeftDescent(int s, Elt w);
  bool isRightDescent(Elt w, int s);
  std::uint32_t leftDescentMask(Elt w);
  std::uint32_t rightDescentMask(Elt w);

  bool bruhatLeq(Elt y, Elt w);

  /*
    Breadth-first enumerations by length. maxLen bounds the length
    (inclusive); cap bounds the number of elements and trips LimitError.
    K is a generator bitmask selecting a standard parabolic subgroup.
  */
  std::vector<Elt> enumerate(int maxLen, std::size_t cap);
  std::vector<Elt> enumerateParabolic(std::uint32_t K, int maxLen,
                                      std::size_t cap);
  bool parabolicIsFinite(std::uint32_t K, std::size_t cap,
                         std::vector<Elt>* elements = nullptr);
  std::vector<Elt> finiteParabolic(std::uint32_t K, std::size_t cap);
  Elt longestElement(std::uint32_t K, std::size_t cap);

  std::uint32_t fullMask() const {
    return (rank() >= 32) ? 0xffffffffu : ((1u << rank()) - 1u);
  }

  // the (length, word) order used for all deterministic output
  bool before(Elt a, Elt b) const;
  void sortElements(std::vector<Elt>& v) const;

private:
  struct Node {
    Word d_word;
    Elt d_inverse;
    Elt d_star;
    std::uint32_t d_ldesc;
    std::uint32_t d_rdesc;
    std::vector<Elt> d_left;
    std::vector<Elt> d_right;
  };

  static constexpr Elt kNone = 0xffffffffu;
  static constexpr std::uint32_t kNoMask = 0xffffffffu;

  std::vector<std::string> d_labels;
  std::vector<std::vector<int>> d_matrix;
  std::vector<int> d_star;
  GeomRing d_ring;
  std::vector<std::vector<GeomRing::Elt>> d_cartan;  // c_{s,t} = 2cos(pi/m)

  mutable std::recursive_mutex d_lock;
  std::vector<Node> d_nodes;
  std::unordered_map<Word, Elt> d_index;
  std::unordered_map<std::uint64_t, int> d_bruhat;  // memo: -1 / +1

  using RootV = std::vector<GeomRing::Elt>;

  RootV unitRoot(int s) const;
  void reflect(RootV& x, int s) const;
  bool rootEqualsUnit(const RootV& x, int s) const;
  int rootSign(const RootV& x) const;

  bool wordLeftDescent(const Word& w, int s) const;
  bool wordRightDescent(const Word& w, int s) const;
  Word exchangeLeft(const Word& w, int s) const;
  Word exchangeRight(const Word& w, int s) const;
  Word canonicalize(Word w) const;  // input: any reduced word

  Elt intern(const Word& canonical);
  bool bruhatLeqLocked(Elt y, Elt w);
};

}  // namespace ivh

#endif
