#pragma once

// Line-oriented text format for algebras, representations, operators and
// cochains.  Indices in the text are 1-based; everything in memory is 0-based.
//
//   # comment
//   [algebra]
//   dim 3
//   [pi1]
//   1 2 3 1          # [e1,e2] = 1 e3, requires i < j
//   [pi2]
//   [rep]
//   dim 2
//   rho 1            # matrix of rho(e1), rows follow
//   1: 0 1
//   2: 0 0
//   mu 1
//   ...
//   [op N]
//   1: 1 0 0
//   2: 0 2 0
//   [cochain w1]
//   source 2         # optional, default dim
//   target 1         # optional, default dim
//   1 2 1 1          # w(e1,e2) = 1 f1

#include "compatlie/compat.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace compatlie {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A matrix as written in the file, row by row.
using MatrixRows = std::vector<std::vector<Rational>>;

Mat to_matrix(const MatrixRows& rows, int cols);
MatrixRows to_rows(const Mat& m);

/// (i, j, k) -> coefficient, 0-based, i < j.
using BracketTable = std::map<std::tuple<int, int, int>, Rational>;

struct CochainBlock {
  int source_dim = 0;
  int target_dim = 0;
  BracketTable entries;
  friend bool operator==(const CochainBlock&, const CochainBlock&) = default;
};

struct RepBlock {
  int module_dim = 0;
  std::map<int, MatrixRows> rho;  // keyed by algebra index; missing means zero
  std::map<int, MatrixRows> mu;
  friend bool operator==(const RepBlock&, const RepBlock&) = default;
};

struct AlgebraDocument {
  int dim = 0;
  BracketTable pi1;
  BracketTable pi2;
  std::optional<RepBlock> rep;
  std::map<std::string, MatrixRows> ops;
  std::map<std::string, CochainBlock> cochains;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Throws ParseError.
AlgebraDocument parse_document(std::string_view text);

/// Canonical text; parse_document(render_document(d)) == d.
std::string render_document(const AlgebraDocument& d);

LieBracket to_bracket(int dim, const BracketTable& t);
Cochain to_cochain(const CochainBlock& b);
/// Missing matrices are zero.
RepPair to_rep(int algebra_dim, const RepBlock& r);

/// The unchecked pair of the document; validate separately.
CompatiblePair document_pair(const AlgebraDocument& d);

}  // namespace compatlie
