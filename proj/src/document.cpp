#include "compatlie/document.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace compatlie {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

enum class Section { None, Algebra, Pi1, Pi2, Rep, Op, Cochain };

class Parser {
 public:
  AlgebraDocument run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      handle_line(line);
      if (end == text.size()) break;
      pos = end + 1;
    }
    finish_section();
    if (!have_dim_) throw ParseError("missing [algebra] dim", line_no_, 1);
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, int column) const { throw ParseError(what, line_no_, column); }
  [[noreturn]] void fail(const std::string& what, const Token& t) const { fail(what, t.column); }

  int integer(const Token& t) const {
    int v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail("malformed integer '" + std::string(t.text) + "'", t);
    return v;
  }

  int index(const Token& t, int bound, const char* what) const {
    const int v = integer(t);
    if (v < 1 || v > bound) fail(std::string(what) + " index " + std::to_string(v) + " out of range 1.." + std::to_string(bound), t);
    return v - 1;
  }

  Rational rational(const Token& t) const {
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), t);
    }
  }

  void expect_count(const std::vector<Token>& toks, std::size_t n, const char* what) const {
    if (toks.size() != n) fail(std::string("expected ") + what, toks.empty() ? 1 : toks.front().column);
  }

  void handle_line(std::string_view line) {
    const auto toks = tokenize(line);
    if (toks.empty()) return;
    if (toks.front().text.front() == '[') return header(line, toks);
    switch (section_) {
      case Section::None:
        fail("content outside a section", toks.front());
      case Section::Algebra:
        return algebra_line(toks);
      case Section::Pi1:
        return bracket_line(toks, doc_.pi1, doc_.dim, doc_.dim);
      case Section::Pi2:
        return bracket_line(toks, doc_.pi2, doc_.dim, doc_.dim);
      case Section::Rep:
        return rep_line(toks);
      case Section::Op:
        return op_line(toks);
      case Section::Cochain:
        return cochain_line(toks);
    }
  }

  void header(std::string_view line, const std::vector<Token>& toks) {
    finish_section();
    const auto open = line.find('[');
    const auto close = line.find(']');
    if (close == std::string_view::npos || line.find_first_not_of(" \t", close + 1) != std::string_view::npos)
      fail("malformed section header", toks.front());
    const auto inner = tokenize(line.substr(open + 1, close - open - 1));
    if (inner.empty()) fail("empty section header", toks.front());
    const std::string_view kind = inner.front().text;
    const int col = toks.front().column;
    if (kind != "algebra" && !have_dim_) fail("the [algebra] section must come first", col);
    auto once = [&](const std::string& key) {
      if (!seen_.insert(key).second) fail("duplicate section [" + key + "]", col);
    };
    auto named = [&]() -> std::string {
      if (inner.size() != 2 || !valid_name(inner[1].text)) fail("section needs a single name", col);
      return std::string(inner[1].text);
    };
    if (kind == "algebra" || kind == "pi1" || kind == "pi2" || kind == "rep") {
      if (inner.size() != 1) fail("unexpected name in section header", col);
      once(std::string(kind));
      section_ = kind == "algebra" ? Section::Algebra
                 : kind == "pi1"   ? Section::Pi1
                 : kind == "pi2"   ? Section::Pi2
                                   : Section::Rep;
      if (section_ == Section::Rep) doc_.rep = RepBlock{};
    } else if (kind == "op") {
      name_ = named();
      once("op " + name_);
      section_ = Section::Op;
      rows_.clear();
    } else if (kind == "cochain") {
      name_ = named();
      once("cochain " + name_);
      section_ = Section::Cochain;
      doc_.cochains[name_] = CochainBlock{doc_.dim, doc_.dim, {}};
    } else {
      fail("unknown section [" + std::string(kind) + "]", col);
    }
    section_line_ = line_no_;
  }

  void algebra_line(const std::vector<Token>& toks) {
    if (toks.front().text != "dim") fail("expected 'dim N'", toks.front());
    expect_count(toks, 2, "'dim N'");
    if (have_dim_) fail("duplicate dim", toks.front());
    doc_.dim = integer(toks[1]);
    if (doc_.dim < 1) fail("dim must be positive", toks[1]);
    have_dim_ = true;
  }

  void bracket_line(const std::vector<Token>& toks, BracketTable& table, int source, int target) {
    expect_count(toks, 4, "'i j k coeff'");
    const int i = index(toks[0], source, "first");
    const int j = index(toks[1], source, "second");
    const int k = index(toks[2], target, "target");
    if (i >= j) fail("entries need i < j", toks[1]);
    const Rational c = rational(toks[3]);
    if (!table.emplace(std::make_tuple(i, j, k), c).second) fail("duplicate entry for the same (i,j,k)", toks[0]);
  }

  // Row "r: c1 ... cm", rows numbered 1, 2, ... in order.
  std::vector<Rational> row_line(const std::vector<Token>& toks, int expected_row, std::optional<std::size_t> width) {
    const Token& head = toks.front();
    if (head.text.size() < 2 || head.text.back() != ':') fail("expected a matrix row 'r: c1 c2 ...'", head);
    const Token number{head.text.substr(0, head.text.size() - 1), head.column};
    if (integer(number) != expected_row) fail("expected row " + std::to_string(expected_row), head);
    std::vector<Rational> row;
    for (std::size_t t = 1; t < toks.size(); ++t) row.push_back(rational(toks[t]));
    if (row.empty()) fail("empty matrix row", head);
    if (width && row.size() != *width) fail("row length " + std::to_string(row.size()) + ", expected " + std::to_string(*width), head);
    return row;
  }

  void rep_line(const std::vector<Token>& toks) {
    RepBlock& rep = *doc_.rep;
    const std::string_view head = toks.front().text;
    if (head == "dim") {
      expect_count(toks, 2, "'dim M'");
      if (rep.module_dim != 0) fail("duplicate dim", toks.front());
      rep.module_dim = integer(toks[1]);
      if (rep.module_dim < 1) fail("dim must be positive", toks[1]);
      return;
    }
    if (head == "rho" || head == "mu") {
      if (rep.module_dim == 0) fail("[rep] needs 'dim M' first", toks.front());
      finish_matrix();
      expect_count(toks, 2, "'rho I' or 'mu I'");
      const int i = index(toks[1], doc_.dim, "algebra");
      auto& family = head == "rho" ? rep.rho : rep.mu;
      if (family.count(i)) fail("duplicate matrix " + std::string(head) + " " + std::to_string(i + 1), toks.front());
      family[i] = {};
      matrix_ = &family[i];
      matrix_line_ = line_no_;
      return;
    }
    if (!matrix_) fail("expected 'dim', 'rho I' or 'mu I'", toks.front());
    const auto m = static_cast<std::size_t>(rep.module_dim);
    if (matrix_->size() == m) fail("too many rows", toks.front());
    matrix_->push_back(row_line(toks, static_cast<int>(matrix_->size()) + 1, m));
  }

  void op_line(const std::vector<Token>& toks) {
    std::optional<std::size_t> width;
    if (!rows_.empty()) width = rows_.front().size();
    rows_.push_back(row_line(toks, static_cast<int>(rows_.size()) + 1, width));
  }

  void cochain_line(const std::vector<Token>& toks) {
    CochainBlock& b = doc_.cochains[name_];
    const std::string_view head = toks.front().text;
    if (head == "source" || head == "target") {
      expect_count(toks, 2, "'source N' or 'target N'");
      if (!b.entries.empty()) fail("source/target must precede the entries", toks.front());
      const int v = integer(toks[1]);
      if (v < 1) fail("dimension must be positive", toks[1]);
      (head == "source" ? b.source_dim : b.target_dim) = v;
      return;
    }
    bracket_line(toks, b.entries, b.source_dim, b.target_dim);
  }

  void finish_matrix() {
    if (matrix_ && matrix_->size() != static_cast<std::size_t>(doc_.rep->module_dim))
      throw ParseError("incomplete matrix: " + std::to_string(matrix_->size()) + " of " +
                           std::to_string(doc_.rep->module_dim) + " rows",
                       matrix_line_, 1);
    matrix_ = nullptr;
  }

  void finish_section() {
    if (section_ == Section::Rep) {
      finish_matrix();
      if (doc_.rep->module_dim == 0) throw ParseError("[rep] without 'dim M'", section_line_, 1);
    }
    if (section_ == Section::Op) {
      if (rows_.empty()) throw ParseError("operator [op " + name_ + "] has no rows", section_line_, 1);
      doc_.ops[name_] = std::move(rows_);
      rows_.clear();
    }
    if (section_ == Section::Algebra && !have_dim_) throw ParseError("[algebra] without 'dim N'", section_line_, 1);
    section_ = Section::None;
  }

  AlgebraDocument doc_;
  bool have_dim_ = false;
  int line_no_ = 0;
  int section_line_ = 0;
  int matrix_line_ = 0;
  Section section_ = Section::None;
  std::string name_;
  std::set<std::string> seen_;
  MatrixRows rows_;
  MatrixRows* matrix_ = nullptr;
};

void render_rows(std::ostringstream& out, const MatrixRows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << r + 1 << ":";
    for (const auto& c : rows[r]) out << ' ' << to_string(c);
    out << '\n';
  }
}

void render_table(std::ostringstream& out, const BracketTable& t) {
  for (const auto& [key, c] : t) {
    const auto [i, j, k] = key;
    out << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << to_string(c) << '\n';
  }
}

}  // namespace

Mat to_matrix(const MatrixRows& rows, int cols) {
  Mat m = Mat::Zero(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(cols)) throw std::invalid_argument("to_matrix: ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
  }
  return m;
}

MatrixRows to_rows(const Mat& m) {
  MatrixRows out(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(m(r, c));
  return out;
}

AlgebraDocument parse_document(std::string_view text) { return Parser().run(text); }

std::string render_document(const AlgebraDocument& d) {
  std::ostringstream out;
  out << "[algebra]\ndim " << d.dim << "\n\n[pi1]\n";
  render_table(out, d.pi1);
  out << "\n[pi2]\n";
  render_table(out, d.pi2);
  if (d.rep) {
    out << "\n[rep]\ndim " << d.rep->module_dim << '\n';
    for (const auto& [i, rows] : d.rep->rho) {
      out << "rho " << i + 1 << '\n';
      render_rows(out, rows);
    }
    for (const auto& [i, rows] : d.rep->mu) {
      out << "mu " << i + 1 << '\n';
      render_rows(out, rows);
    }
  }
  for (const auto& [name, rows] : d.ops) {
    out << "\n[op " << name << "]\n";
    render_rows(out, rows);
  }
  for (const auto& [name, b] : d.cochains) {
    out << "\n[cochain " << name << "]\nsource " << b.source_dim << "\ntarget " << b.target_dim << '\n';
    render_table(out, b.entries);
  }
  return out.str();
}

LieBracket to_bracket(int dim, const BracketTable& t) {
  LieBracket b(dim);
  for (const auto& [key, c] : t) {
    const auto [i, j, k] = key;
    b.add(i, j, k, c);
  }
  return b;
}

Cochain to_cochain(const CochainBlock& b) {
  Cochain c(2, b.source_dim, b.target_dim);
  for (const auto& [key, v] : b.entries) {
    const auto [i, j, k] = key;
    c.coeffs()(k, subset_rank(b.source_dim, std::vector<int>{i, j})) += v;
  }
  return c;
}

RepPair to_rep(int algebra_dim, const RepBlock& r) {
  RepPair rep = RepPair::zero(algebra_dim, r.module_dim);
  for (const auto& [i, rows] : r.rho) rep.rho[static_cast<std::size_t>(i)] = to_matrix(rows, r.module_dim);
  for (const auto& [i, rows] : r.mu) rep.mu[static_cast<std::size_t>(i)] = to_matrix(rows, r.module_dim);
  return rep;
}

CompatiblePair document_pair(const AlgebraDocument& d) {
  return CompatiblePair::unchecked(to_bracket(d.dim, d.pi1), to_bracket(d.dim, d.pi2));
}

}  // namespace compatlie
