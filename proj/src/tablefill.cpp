/*
  This is tablefill.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/tablefill.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "ivhecke/error.h"
#include "ivhecke/mod2model.h"

namespace ivh {

std::vector<TableFill::Elt> TableFill::targets(int maxLen, std::size_t cap) {
  std::vector<Elt> ws = involutions().all(maxLen, cap);
  system().sortElements(ws);
  return ws;
}

std::vector<TableRow> TableFill::rowsFor(CanonicalBasis& solver, Elt w) {
  std::vector<TableRow> rows;
  const CanonicalBasis::Column& column = solver.column(w);
  std::vector<Elt> sources;
  sources.reserve(column.size());
  for (const auto& entry : column) {
    sources.push_back(entry.first);
  }
  system().sortElements(sources);
  rows.reserve(sources.size());
  for (Elt y : sources) {
    TableRow row;
    row.d_y = y;
    row.d_w = w;
    row.d_split = solver.pPM(y, w);
    row.d_classical = d_classical.klPolynomial(y, w);
    row.d_plus = halfSum(row.d_classical, row.d_split);
    row.d_minus = halfDifference(row.d_classical, row.d_split);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> TableFill::fillSerial(int maxLen, std::size_t cap) {
  std::vector<TableRow> rows;
  for (Elt w : targets(maxLen, cap)) {
    std::vector<TableRow> block = rowsFor(d_canonical, w);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

std::vector<TableRow> TableFill::fillParallel(int maxLen, std::size_t cap) {
  std::vector<Elt> ws = targets(maxLen, cap);

  // Serial warm of everything the per-target solves share: the element
  // registry and r-columns feeding the split solve, and the one-parameter
  // columns, whose table locks for the whole duration of a solve.
  for (Elt w : ws) {
    d_canonical.rTable().column(w);
    d_classical.pColumn(w);
  }

  std::vector<std::vector<TableRow>> blocks(ws.size());
  std::string firstError;

  // An exception must not unwind out of the parallel region, so each
  // iteration traps and the first message is rethrown afterwards.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(ws.size()); ++i) {
    try {
      CanonicalBasis local(d_canonical.rTable());
      blocks[static_cast<std::size_t>(i)] = rowsFor(local, ws[i]);
    } catch (const std::exception& e) {
#pragma omp critical(ivhTableFillError)
      if (firstError.empty()) {
        firstError = e.what();
      }
    }
  }

  if (!firstError.empty()) {
    throw InternalError("tablefill: " + firstError);
  }

  std::vector<TableRow> rows;
  for (const std::vector<TableRow>& block : blocks) {
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

}  // namespace ivh
