/*
  This is tablefill.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_TABLEFILL_H
#define IVH_TABLEFILL_H

#include <cstdint>
#include <vector>

#include "ivhecke/canonical.h"
#include "ivhecke/classical.h"
#include "ivhecke/coxeter.h"
#include "ivhecke/involution.h"
#include "ivhecke/laurent.h"

namespace ivh {

/*
  TableFill produces the full polynomial table over the twisted involutions
  up to a length bound: one row per comparable pair (y, w), carrying the
  split polynomial P±, the one-parameter polynomial P of the underlying
  group, and the integer halves P+ = (P + P±)/2 and P- = (P - P±)/2. Rows
  are ordered by target (ascending in length, then word) and by source
  within each target, so exports are byte for byte reproducible.

  Column solves for distinct targets are independent once the shared caches
  below them are populated, so the parallel fill warms the r-table and the
  one-parameter table serially and then distributes the per-target split
  solves across OpenMP threads, each through a solver of its own that reads
  the warmed shared tables. The serial fill runs the identical row assembly
  in a plain loop over the shared solver and is the reference the parallel
  path is measured and tested against.
*/

struct TableRow {
  CoxeterSystem::Elt d_y;
  CoxeterSystem::Elt d_w;
  Laurent d_split;      // P±
  Laurent d_classical;  // P
  Laurent d_plus;       // (P + P±)/2
  Laurent d_minus;      // (P - P±)/2
};

class TableFill {
public:
  using Elt = CoxeterSystem::Elt;

  TableFill(CanonicalBasis& canonical, KLTable& classical)
      : d_canonical(canonical), d_classical(classical) {}

  CoxeterSystem& system() const { return d_canonical.system(); }
  Involutions& involutions() const { return d_canonical.involutions(); }

  std::vector<Elt> targets(int maxLen, std::size_t cap);

  std::vector<TableRow> fillSerial(int maxLen, std::size_t cap);
  std::vector<TableRow> fillParallel(int maxLen, std::size_t cap);

private:
  CanonicalBasis& d_canonical;
  KLTable& d_classical;

  std::vector<TableRow> rowsFor(CanonicalBasis& solver, Elt w);
};

}  // namespace ivh

#endif
