/*
  This is io.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/io.h"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "ivhecke/error.h"

namespace ivh {

namespace {

using json = nlohmann::ordered_json;

json parseJson(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

long long toInt64(const Int& c) {
  static const Int lo(std::numeric_limits<long long>::min());
  static const Int hi(std::numeric_limits<long long>::max());
  if (c < lo || c > hi) {
    throw InternalError("toInt64: coefficient out of range");
  }
  return c.convert_to<long long>();
}

json laurentObject(const Laurent& p) {
  json coeffs = json::array();
  if (!p.isZero()) {
    for (int e = p.minExp(); e <= p.maxExp(); ++e) {
      coeffs.push_back(toInt64(p.coeff(e)));
    }
  }
  json out;
  out["offset"] = p.isZero() ? 0 : p.minExp();
  out["coeffs"] = std::move(coeffs);
  return out;
}

std::vector<std::string> maskLabels(const CoxeterSystem& system,
                                    DoubleCoset::Mask mask) {
  std::vector<std::string> labels;
  for (int s = 0; s < system.rank(); ++s) {
    if (mask & (DoubleCoset::Mask{1} << s)) {
      labels.push_back(system.label(s));
    }
  }
  return labels;
}

}  // namespace

std::unique_ptr<CoxeterSystem> SystemDescriptor::build() const {
  return std::make_unique<CoxeterSystem>(d_labels, d_matrix, d_star);
}

SystemDescriptor parseDescriptor(const std::string& text) {
  json j = parseJson(text, "descriptor");
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix")) {
    throw DomainError("descriptor: expected an object with labels and matrix");
  }

  SystemDescriptor out;
  for (const json& entry : j.at("labels")) {
    if (!entry.is_string()) {
      throw DomainError("descriptor: labels must be strings");
    }
    std::string label = entry.get<std::string>();
    if (label.empty() ||
        label.find_first_of(".,\" \t\r\n") != std::string::npos) {
      throw DomainError(
          "descriptor: label '" + label +
          "' may not be empty or contain '.', ',', '\"', or whitespace");
    }
    out.d_labels.push_back(std::move(label));
  }

  for (const json& row : j.at("matrix")) {
    std::vector<int> entries;
    for (const json& entry : row) {
      if (entry.is_string()) {
        if (entry.get<std::string>() != "inf") {
          throw DomainError("descriptor: the only string matrix entry is "
                            "\"inf\"");
        }
        entries.push_back(0);
      } else if (entry.is_number_integer()) {
        entries.push_back(entry.get<int>());
      } else {
        throw DomainError("descriptor: matrix entries must be integers or "
                          "\"inf\"");
      }
    }
    out.d_matrix.push_back(std::move(entries));
  }

  if (j.contains("star")) {
    for (const json& entry : j.at("star")) {
      if (!entry.is_number_integer()) {
        throw DomainError("descriptor: star must be an index permutation");
      }
      out.d_star.push_back(entry.get<int>());
    }
  } else {
    for (std::size_t s = 0; s < out.d_labels.size(); ++s) {
      out.d_star.push_back(static_cast<int>(s));
    }
  }
  return out;
}

SystemDescriptor readDescriptor(const std::string& path) {
  return parseDescriptor(readText(path));
}

std::vector<int> parseStar(const std::string& text, int rank) {
  std::vector<int> star;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      star.push_back(std::stoi(piece, &used));
      if (used != piece.size()) {
        throw std::invalid_argument(piece);
      }
    } catch (const std::exception&) {
      throw DomainError("star: '" + piece + "' is not an index");
    }
  }
  if (static_cast<int>(star.size()) != rank) {
    throw DomainError("star: expected " + std::to_string(rank) + " indices");
  }
  return star;
}

std::string formatWord(const CoxeterSystem& system, CoxeterSystem::Elt w) {
  CoxeterSystem::Word letters = system.wordOf(w);
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += system.label(letters[i]);
  }
  return out;
}

CoxeterSystem::Elt parseWord(CoxeterSystem& system, const std::string& text) {
  if (text.empty()) {
    return CoxeterSystem::kIdentity;
  }
  CoxeterSystem::Word letters;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, '.')) {
    int letter = -1;
    for (int s = 0; s < system.rank(); ++s) {
      if (system.label(s) == piece) {
        letter = s;
        break;
      }
    }
    if (letter < 0) {
      throw DomainError("word: unknown generator label '" + piece + "'");
    }
    letters.push_back(static_cast<char>(letter));
  }
  return system.fromLetters(letters);
}

std::string laurentToJson(const Laurent& p) { return laurentObject(p).dump(); }

Laurent laurentFromJson(const std::string& text) {
  json j = parseJson(text, "polynomial");
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs") ||
      !j.at("offset").is_number_integer() || !j.at("coeffs").is_array()) {
    throw DomainError("polynomial: expected {\"offset\": int, \"coeffs\": "
                      "[ints]}");
  }
  std::vector<Int> coeffs;
  for (const json& entry : j.at("coeffs")) {
    if (!entry.is_number_integer()) {
      throw DomainError("polynomial: coefficients must be integers");
    }
    coeffs.push_back(Int(entry.get<long long>()));
  }
  return Laurent::fromRaw(j.at("offset").get<int>(), std::move(coeffs));
}

std::string moduleVectorToJson(CoxeterSystem& system, const MElt& m) {
  std::vector<CoxeterSystem::Elt> support;
  for (const auto& term : m) {
    if (!term.second.isZero()) {
      support.push_back(term.first);
    }
  }
  system.sortElements(support);

  json terms = json::array();
  for (CoxeterSystem::Elt w : support) {
    json term;
    term["w"] = formatWord(system, w);
    term["coeff"] = laurentObject(m.at(w));
    terms.push_back(std::move(term));
  }
  json out;
  out["terms"] = std::move(terms);
  return out.dump();
}

std::string elementsToCsv(CoxeterSystem& system,
                          const std::vector<CoxeterSystem::Elt>& elements) {
  std::string out = "w,l\n";
  for (CoxeterSystem::Elt w : elements) {
    out += formatWord(system, w) + "," + std::to_string(system.length(w)) +
           "\n";
  }
  return out;
}

std::string elementsToJson(CoxeterSystem& system,
                           const std::vector<CoxeterSystem::Elt>& elements) {
  json rows = json::array();
  for (CoxeterSystem::Elt w : elements) {
    json row;
    row["w"] = formatWord(system, w);
    row["l"] = system.length(w);
    rows.push_back(std::move(row));
  }
  json out;
  out["elements"] = std::move(rows);
  return out.dump();
}

std::string tableToCsv(CoxeterSystem& system,
                       const std::vector<TableRow>& rows) {
  std::string out = "y,w,l_y,l_w,Ppm,P,Pplus,Pminus\n";
  for (const TableRow& row : rows) {
    out += formatWord(system, row.d_y) + "," + formatWord(system, row.d_w) +
           "," + std::to_string(system.length(row.d_y)) + "," +
           std::to_string(system.length(row.d_w)) + "," +
           row.d_split.toString() + "," + row.d_classical.toString() + "," +
           row.d_plus.toString() + "," + row.d_minus.toString() + "\n";
  }
  return out;
}

std::string tableToJson(CoxeterSystem& system,
                        const std::vector<TableRow>& rows) {
  json items = json::array();
  for (const TableRow& row : rows) {
    json item;
    item["y"] = formatWord(system, row.d_y);
    item["w"] = formatWord(system, row.d_w);
    item["l_y"] = system.length(row.d_y);
    item["l_w"] = system.length(row.d_w);
    item["Ppm"] = row.d_split.toString();
    item["P"] = row.d_classical.toString();
    item["Pplus"] = row.d_plus.toString();
    item["Pminus"] = row.d_minus.toString();
    items.push_back(std::move(item));
  }
  json out;
  out["rows"] = std::move(items);
  return out.dump();
}

namespace {

json cosetObject(DoubleCoset& coset, std::size_t cap) {
  CoxeterSystem& system = coset.system();
  std::vector<CoxeterSystem::Elt> members = coset.twistedMembers(cap);
  system.sortElements(members);

  json words = json::array();
  for (CoxeterSystem::Elt x : members) {
    words.push_back(formatWord(system, x));
  }
  json out;
  out["K"] = maskLabels(system, coset.kMask());
  out["b"] = formatWord(system, coset.minimal());
  out["d"] = formatWord(system, coset.maximal());
  out["J"] = maskLabels(system, coset.jMask());
  out["case_tag"] = coset.caseTag();
  out["involutions"] = std::move(words);
  return out;
}

}  // namespace

std::string cosetToJson(DoubleCoset& coset, std::size_t cap) {
  return cosetObject(coset, cap).dump();
}

std::string cosetsToJson(std::vector<DoubleCoset>& cosets, std::size_t cap) {
  json items = json::array();
  for (DoubleCoset& coset : cosets) {
    items.push_back(cosetObject(coset, cap));
  }
  json out;
  out["cosets"] = std::move(items);
  return out.dump();
}

std::string scanToCsv(CoxeterSystem& system,
                      const std::vector<AffineSetup::ScanRow>& rows) {
  std::string out = "dprime_word,d_word,ppm,kl_neg_u,equal,N_u1\n";
  for (const AffineSetup::ScanRow& row : rows) {
    out += formatWord(system, row.d_dPrime) + "," +
           formatWord(system, row.d_d) + "," + row.d_split.toString() + "," +
           row.d_classicalNegU.toString() + "," +
           (row.d_equal ? "true" : "false") + "," + row.d_multiplicity.str() +
           "\n";
  }
  return out;
}

std::string scanToJson(CoxeterSystem& system,
                       const std::vector<AffineSetup::ScanRow>& rows) {
  json items = json::array();
  for (const AffineSetup::ScanRow& row : rows) {
    json item;
    item["dprime_word"] = formatWord(system, row.d_dPrime);
    item["d_word"] = formatWord(system, row.d_d);
    item["ppm"] = row.d_split.toString();
    item["kl_neg_u"] = row.d_classicalNegU.toString();
    item["equal"] = row.d_equal;
    item["N_u1"] = toInt64(row.d_multiplicity);
    items.push_back(std::move(item));
  }
  json out;
  out["rows"] = std::move(items);
  return out.dump();
}

std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw DomainError("cannot write '" + path + "'");
  }
}

}  // namespace ivh
