/*
  This is io.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_IO_H
#define IVH_IO_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ivhecke/affine.h"
#include "ivhecke/cosets.h"
#include "ivhecke/coxeter.h"
#include "ivhecke/hecke.h"
#include "ivhecke/laurent.h"
#include "ivhecke/tablefill.h"

namespace ivh {

/*
  Readers and writers for the textual interfaces: system descriptors,
  words, polynomials, module vectors, and the table reports.

  Exports are deterministic. Rows and terms are sorted by (length, word),
  JSON keys keep a fixed order, and polynomials print through the one
  string form, so equal inputs produce byte-identical output.
*/

/*
  A descriptor carries what the JSON holds: generator labels, the Coxeter
  matrix with 0 on an unbonded pair ("inf" in the file), and the diagram
  involution as an index permutation, identity when the file omits it.
  Labels double as word letters and CSV fields, so they may not contain
  '.', ',', '"', or whitespace.
*/
struct SystemDescriptor {
  std::vector<std::string> d_labels;
  std::vector<std::vector<int>> d_matrix;
  std::vector<int> d_star;

  std::unique_ptr<CoxeterSystem> build() const;
};

SystemDescriptor parseDescriptor(const std::string& text);
SystemDescriptor readDescriptor(const std::string& path);

// a full permutation as comma-separated indices, "0,2,1"
std::vector<int> parseStar(const std::string& text, int rank);

// words are generator labels joined by '.'; the empty word is the identity
std::string formatWord(const CoxeterSystem& system, CoxeterSystem::Elt w);
CoxeterSystem::Elt parseWord(CoxeterSystem& system, const std::string& text);

// {"offset": o, "coeffs": [c_o, c_{o+1}, ...]} over ascending exponents
std::string laurentToJson(const Laurent& p);
Laurent laurentFromJson(const std::string& text);

// {"terms": [{"w": word, "coeff": {...}}, ...]} sorted by (length, word)
std::string moduleVectorToJson(CoxeterSystem& system, const MElt& m);

// element lists; columns w,l
std::string elementsToCsv(CoxeterSystem& system,
                          const std::vector<CoxeterSystem::Elt>& elements);
std::string elementsToJson(CoxeterSystem& system,
                           const std::vector<CoxeterSystem::Elt>& elements);

// polynomial tables; columns y,w,l_y,l_w,Ppm,P,Pplus,Pminus
std::string tableToCsv(CoxeterSystem& system, const std::vector<TableRow>& rows);
std::string tableToJson(CoxeterSystem& system, const std::vector<TableRow>& rows);

// {"K": [...], "b": word, "d": word, "J": [...], "case_tag": tag,
//  "involutions": [words]}
std::string cosetToJson(DoubleCoset& coset, std::size_t cap);
std::string cosetsToJson(std::vector<DoubleCoset>& cosets, std::size_t cap);

// scan report; columns dprime_word,d_word,ppm,kl_neg_u,equal,N_u1
std::string scanToCsv(CoxeterSystem& system,
                      const std::vector<AffineSetup::ScanRow>& rows);
std::string scanToJson(CoxeterSystem& system,
                       const std::vector<AffineSetup::ScanRow>& rows);

// whole-file helpers; DomainError when the file cannot be opened
std::string readText(const std::string& path);
void writeText(const std::string& path, const std::string& text);

}  // namespace ivh

#endif
