// compatlie-cli: checks and computations on algebra documents.
//
// Exit codes: 0 all verdicts ok, 1 some verdict failed, 2 usage or input error.

#include "compatlie/deformation.hpp"
#include "compatlie/document.hpp"
#include "compatlie/extension.hpp"
#include "compatlie/poisson.hpp"
#include "compatlie/sampling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace compatlie;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "text";
  bool witness = false;
  bool timing = false;
  int max_degree = 2;
  bool reduced = false;
  bool representatives = false;
  int poly_degree = 1;
  std::string omega, nijenhuis, theta, xi;
  std::string mode = "abelian";
  unsigned seed = 1;
  int count = 10;
};

// ---------------------------------------------------------------------------
// JSON helpers

Json rational(const Rational& r) { return to_string(r); }

Json vector_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational(v(i)));
  return out;
}

Json matrix_json(const Mat& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r).transpose()));
  return out;
}

// Nonzero structure constants, 1-based: "i j k coeff".
Json table_json(const Cochain& c) {
  Json out = Json::array();
  const auto all = subsets(c.source_dim(), c.arity());
  for (std::size_t col = 0; col < all.size(); ++col)
    for (int k = 0; k < c.target_dim(); ++k) {
      const Rational& v = c.coeffs()(k, static_cast<Index>(col));
      if (v == 0) continue;
      std::string entry;
      for (int i : all[col]) entry += std::to_string(i + 1) + " ";
      entry += std::to_string(k + 1) + " " + to_string(v);
      out.push_back(entry);
    }
  return out;
}

Json rep_json(const std::vector<Mat>& mats) {
  Json out = Json::array();
  for (const auto& m : mats) out.push_back(matrix_json(m));
  return out;
}

Json basis_json(const std::vector<int>& basis) {
  Json out = Json::array();
  for (int i : basis) out.push_back(i + 1);
  return out;
}

struct Report {
  Json body = Json::object();
  bool failed = false;

  void verdict(const std::string& name, const Verdict& v, bool witness) {
    Json entry;
    entry["check"] = name;
    entry["ok"] = v.ok;
    if (!v.ok) {
      failed = true;
      entry["condition"] = v.witness->condition;
      if (witness) {
        entry["basis"] = basis_json(v.witness->basis);
        entry["value"] = vector_json(v.witness->value);
      }
    }
    body["verdicts"].push_back(entry);
  }
};

// ---------------------------------------------------------------------------
// Rendering

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string out = "[";
  bool first = true;
  for (const auto& e : j) {
    if (!first) out += ", ";
    out += inline_text(e);
    first = false;
  }
  return out + "]";
}

bool inline_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!is_scalar(e) && !inline_array(e)) return false;
  return true;
}

// Arrays of objects whose values are scalars or inline arrays print as a
// table; the columns are the union of the keys in order of appearance.
std::vector<std::string> table_columns(const Json& j) {
  std::vector<std::string> keys;
  if (!j.is_array() || j.empty()) return keys;
  for (const auto& row : j) {
    if (!row.is_object()) return {};
    for (const auto& [k, v] : row.items()) {
      if (!is_scalar(v) && !inline_array(v)) return {};
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  }
  return keys;
}

void render_text(const Json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value) || inline_array(value)) {
      out << pad << key << ": " << inline_text(value) << '\n';
    } else if (const auto keys = table_columns(value); !keys.empty()) {
      out << pad << key << ":\n";
      std::vector<std::vector<std::string>> rows{keys};
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (const auto& k : keys) cells.push_back(row.contains(k) ? inline_text(row[k]) : "");
        rows.push_back(cells);
      }
      std::vector<std::size_t> width(keys.size(), 0);
      for (const auto& cells : rows)
        for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
      for (const auto& cells : rows) {
        std::string s = pad + "  ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
          std::string cell = cells[c];
          cell.resize(width[c], ' ');
          s += cell + "  ";
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
      }
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& e : value) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render_text(e, indent + 4, out);
        } else {
          out << pad << "  - " << inline_text(e) << '\n';
        }
      }
    } else {
      out << pad << key << ":\n";
      render_text(value, indent + 2, out);
    }
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void render_csv(const Json& j, const std::string& path, std::ostream& out) {
  if (is_scalar(j)) {
    out << csv_cell(path) << ',' << csv_cell(scalar_text(j)) << '\n';
    return;
  }
  if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& e : j) render_csv(e, path + "." + std::to_string(i++), out);
    return;
  }
  for (const auto& [k, v] : j.items()) render_csv(v, path.empty() ? k : path + "." + k, out);
}

std::string render(const Json& j, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "key,value\n";
    render_csv(j, "", out);
  } else {
    render_text(j, 0, out);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Input

AlgebraDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

const CochainBlock& cochain_block(const AlgebraDocument& d, const std::string& name, int source, int target) {
  const auto it = d.cochains.find(name);
  if (it == d.cochains.end()) throw UsageError("no [cochain " + name + "] in the document");
  if (it->second.source_dim != source || it->second.target_dim != target)
    throw UsageError("[cochain " + name + "] must map dimension " + std::to_string(source) + " to " +
                     std::to_string(target));
  return it->second;
}

Mat op_matrix(const AlgebraDocument& d, const std::string& name, Index rows, Index cols) {
  const auto it = d.ops.find(name);
  if (it == d.ops.end()) throw UsageError("no [op " + name + "] in the document");
  const MatrixRows& r = it->second;
  if (static_cast<Index>(r.size()) != rows || static_cast<Index>(r.front().size()) != cols)
    throw UsageError("[op " + name + "] must be " + std::to_string(rows) + " x " + std::to_string(cols));
  return to_matrix(r, static_cast<int>(cols));
}

std::pair<Cochain, Cochain> cochain_pair(const AlgebraDocument& d, const std::string& name, int source, int target) {
  return {to_cochain(cochain_block(d, name + "1", source, target)),
          to_cochain(cochain_block(d, name + "2", source, target))};
}

// Validates the pair into the report; nullopt when it fails.
std::optional<CompatiblePair> checked_pair(const AlgebraDocument& d, Report& report, const Options& o) {
  const CompatiblePair p = document_pair(d);
  const Verdict v = validate_pair(p.first(), p.second());
  report.verdict("pair", v, o.witness);
  if (!v) return std::nullopt;
  return p;
}

RepPair coefficients(const AlgebraDocument& d, const CompatiblePair& pair, Report& report, const Options& o,
                     bool& ok) {
  ok = true;
  if (!d.rep) {
    report.body["coefficients"] = "adjoint";
    return adjoint_rep(pair);
  }
  report.body["coefficients"] = "rep";
  const RepPair rep = to_rep(d.dim, *d.rep);
  const Verdict v = validate_rep(pair, rep);
  report.verdict("rep", v, o.witness);
  ok = v.ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Commands

void cmd_check(const AlgebraDocument& d, const Options& o, Report& r) {
  const CompatiblePair p = document_pair(d);
  r.verdict("pi1", validate_bracket(p.first()), o.witness);
  r.verdict("pi2", validate_bracket(p.second()), o.witness);
  const Verdict pair = validate_pair(p.first(), p.second());
  r.verdict("pair", pair, o.witness);
  if (d.rep) {
    if (pair)
      r.verdict("rep", validate_rep(p, to_rep(d.dim, *d.rep)), o.witness);
    else
      r.body["rep"] = "skipped: the pair is not compatible";
  }
}

void cmd_cohomology(const AlgebraDocument& d, const Options& o, Report& r) {
  if (o.max_degree < 0) throw UsageError("--max-degree must be non-negative");
  r.body["max_degree"] = o.max_degree;
  r.body["reduced"] = o.reduced;
  const auto pair = checked_pair(d, r, o);
  if (!pair) return;
  bool ok = true;
  const RepPair rep = coefficients(d, *pair, r, o, ok);
  if (!ok) return;
  Json table = Json::array();
  Json reps = Json::object();
  for (int n = 0; n <= o.max_degree; ++n) {
    const CohomologyResult res = o.reduced ? reduced_cohomology(*pair, rep, n) : cohomology(*pair, rep, n);
    Json row;
    row["degree"] = n;
    row["dim"] = res.dim;
    row["kernel"] = res.kernel_dim;
    row["image"] = res.image_dim;
    table.push_back(row);
    if (o.representatives) {
      Json list = Json::array();
      for (const auto& v : res.representatives.vectors) list.push_back(vector_json(v));
      reps[std::to_string(n)] = list;
    }
  }
  r.body["cohomology"] = table;
  if (o.representatives) r.body["representatives"] = reps;
}

void cmd_deform(const AlgebraDocument& d, const Options& o, Report& r) {
  if (o.omega.empty() && o.nijenhuis.empty()) throw UsageError("deform needs --omega or --nijenhuis");
  const auto pair = checked_pair(d, r, o);
  if (!pair) return;
  const int n = d.dim;
  if (!o.omega.empty()) {
    const auto [w1, w2] = cochain_pair(d, o.omega, n, n);
    const DeformationDatum datum{w1, w2};
    const Verdict inf = is_infinitesimal_deformation(*pair, datum);
    r.verdict("deformation", inf, o.witness);
    r.verdict("probes", check_probes(*pair, datum), o.witness);
    if (inf) {
      const DeformationDatum zero{Cochain(2, n, n), Cochain(2, n, n)};
      Json triv;
      if (const auto nmat = linear_equivalence_part(*pair, datum, zero)) {
        triv["class_in_H2"] = "zero";
        triv["N"] = matrix_json(*nmat);
        const Verdict eq = deformations_equivalent(*pair, datum, zero, *nmat);
        triv["equivalent_to_zero_with_this_N"] = eq.ok;
        if (!eq) triv["failed_equation"] = eq.witness->condition;
      } else {
        triv["class_in_H2"] = "nonzero";
      }
      r.body["triviality"] = triv;
    }
  }
  if (!o.nijenhuis.empty()) {
    const Mat nmat = op_matrix(d, o.nijenhuis, n, n);
    const Verdict nij = is_nijenhuis(*pair, nmat);
    r.verdict("nijenhuis", nij, o.witness);
    if (nij) {
      const DeformationDatum t = trivial_deformation_from_nijenhuis(*pair, nmat);
      r.verdict("trivial_deformation", is_infinitesimal_deformation(*pair, t), o.witness);
      r.verdict("trivial_probes", check_probes(*pair, t), o.witness);
      Json out;
      out["omega1"] = table_json(t.omega1);
      out["omega2"] = table_json(t.omega2);
      r.body["trivial_deformation"] = out;
    }
  }
}

void cmd_extend(const AlgebraDocument& d, const Options& o, Report& r) {
  if (o.mode != "abelian" && o.mode != "nonabelian") throw UsageError("--mode must be abelian or nonabelian");
  if (o.omega.empty()) throw UsageError("extend needs --omega");
  if (!d.rep) throw UsageError("extend needs a [rep] section for rho and mu");
  if (o.mode == "nonabelian" && o.theta.empty()) throw UsageError("--mode nonabelian needs --theta");
  r.body["mode"] = o.mode;
  const auto g = checked_pair(d, r, o);
  if (!g) return;
  const int n = d.dim, m = d.rep->module_dim;
  LieBracket h1(m), h2(m);
  if (o.mode == "nonabelian") {
    const auto [t1, t2] = cochain_pair(d, o.theta, m, m);
    h1 = LieBracket(t1);
    h2 = LieBracket(t2);
    const Verdict hv = validate_pair(h1, h2);
    r.verdict("h", hv, o.witness);
    if (!hv) return;
  }
  const RepPair rep = to_rep(n, *d.rep);
  const auto [w1, w2] = cochain_pair(d, o.omega, n, m);
  const ExtensionDatum datum{*g, CompatiblePair(h1, h2), rep.rho, rep.mu, w1, w2};
  const Verdict nine = check_extension_equations(datum);
  r.verdict("extension_equations", nine, o.witness);
  r.verdict("maurer_cartan", mc_check(datum), o.witness);
  if (!nine) return;
  const CompatiblePair e = build_extension(datum);
  Json built;
  built["dim"] = n + m;
  built["pi1"] = table_json(e.first().cochain());
  built["pi2"] = table_json(e.second().cochain());
  r.body["extension"] = built;
  if (o.mode == "abelian") {
    const Cochain zero(2, n, m);
    const auto split = cocycles_cohomologous(*g, rep, {w1, w2}, {zero, zero});
    Json cls;
    cls["class_in_H2"] = split.verdict.ok ? "zero" : "nonzero";
    if (split.phi) cls["phi"] = matrix_json(*split.phi);
    r.body["classification"] = cls;
  }
  if (!o.xi.empty()) {
    const Mat xi = op_matrix(d, o.xi, m, n);
    const ExtensionDatum t = gauge_transform(datum, xi);
    Json out;
    out["rho"] = rep_json(t.rho);
    out["mu"] = rep_json(t.mu);
    out["omega1"] = table_json(t.omega1);
    out["omega2"] = table_json(t.omega2);
    r.body["gauge_transform"] = out;
    r.verdict("isomorphic_under_xi", extensions_isomorphic_under(datum, t, xi), o.witness);
  }
}

void cmd_poisson(const AlgebraDocument& d, const Options& o, Report& r) {
  if (o.poly_degree < 0 || o.max_degree < 0) throw UsageError("degrees must be non-negative");
  r.body["poly_degree"] = o.poly_degree;
  r.body["max_degree"] = o.max_degree;
  const auto pair = checked_pair(d, r, o);
  if (!pair) return;
  const PolyRep poly = lie_poisson_rep(*pair, o.poly_degree);
  r.body["module_dim"] = poly.basis.size();
  r.verdict("lie_poisson_rep", validate_rep(*pair, poly.rep), o.witness);
  const auto dims = reduced_bihamiltonian_dims(*pair, o.poly_degree, o.max_degree);
  Json table = Json::array();
  for (int p = 0; p <= o.poly_degree; ++p)
    for (int n = 0; n <= o.max_degree; ++n) {
      Json row;
      row["poly_degree"] = p;
      row["degree"] = n;
      row["dim"] = dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
      table.push_back(row);
    }
  r.body["reduced_cohomology"] = table;
}

void cmd_properties(const Options& o, Report& r) {
  if (o.count < 1) throw UsageError("--count must be positive");
  r.body["seed"] = o.seed;
  r.body["count"] = o.count;
  sampling::Rng rng(o.seed);
  int complex_ok = 0, nr_ok = 0, ext_ok = 0;
  for (int t = 0; t < o.count; ++t) {
    const CompatiblePair pair = sampling::random_pair(rng, 2 + t % 3);
    const RepPair rep = sampling::random_rep(rng, pair, 3);
    bool ok = true;
    for (int n = 0; n <= 2; ++n) {
      const ComplexSlice a = coboundary_matrix(pair, rep, n);
      const ComplexSlice b = coboundary_matrix(pair, rep, n + 1);
      ok = ok && is_zero(Mat(b.matrix * a.matrix));
    }
    complex_ok += ok;

    const int dim = 1 + t % 3;
    const Cochain p = sampling::random_cochain(rng, 1 + t % 2, dim, dim);
    const Cochain q = sampling::random_cochain(rng, 2 - t % 2, dim, dim);
    const Cochain s = sampling::random_cochain(rng, 2, dim, dim);
    const int dp = p.arity() - 1, dq = q.arity() - 1, ds = s.arity() - 1;
    const Rational sign_pq = (dp * dq) % 2 ? -1 : 1;
    const bool anti = nr_bracket(p, q) == -(sign_pq * nr_bracket(q, p));
    const Rational a = (dp * ds) % 2 ? -1 : 1, b = (dq * dp) % 2 ? -1 : 1, c = (ds * dq) % 2 ? -1 : 1;
    const Cochain jac = a * nr_bracket(p, nr_bracket(q, s)) + b * nr_bracket(q, nr_bracket(s, p)) +
                        c * nr_bracket(s, nr_bracket(p, q));
    nr_ok += anti && jac.is_zero();

    const ExtensionDatum e = sampling::random_extension(rng, 1 + t % 3, 1 + (t / 3) % 3);
    const ExtensionDatum d = t % 2 ? sampling::perturb(rng, e) : e;
    const auto [b1, b2] = assemble_extension_brackets(d);
    const bool nine = static_cast<bool>(check_extension_equations(d));
    ext_ok += nine == static_cast<bool>(validate_pair(b1, b2)) && nine == static_cast<bool>(mc_check(d));
  }
  auto add = [&](const char* name, int passed) {
    Json row;
    row["property"] = name;
    row["passed"] = passed;
    row["total"] = o.count;
    r.body["properties"].push_back(row);
    if (passed != o.count) r.failed = true;
  };
  add("delta_squared_zero", complex_ok);
  add("nr_graded_lie", nr_ok);
  add("extension_criteria_agree", ext_ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for compatible Lie algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "algebra document")->required();
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--witness", o.witness, "print basis and value of failed checks");
    sub->add_flag("--timing", o.timing, "add the elapsed time to the report");
  };

  auto* check = app.add_subcommand("check", "validate the brackets, the pair and the representation");
  common(check, true);
  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions with coefficients in [rep] or adjoint");
  common(coh, true);
  coh->add_option("--max-degree", o.max_degree, "highest degree");
  coh->add_flag("--reduced", o.reduced, "reduced complex instead of the staircase complex");
  coh->add_flag("--representatives", o.representatives, "print class representatives");
  auto* deform = app.add_subcommand("deform", "infinitesimal deformations and Nijenhuis operators");
  common(deform, true);
  deform->add_option("--omega", o.omega, "cochains NAME1, NAME2");
  deform->add_option("--nijenhuis", o.nijenhuis, "operator NAME");
  auto* extend = app.add_subcommand("extend", "extensions by the module of [rep]");
  common(extend, true);
  extend->add_option("--mode", o.mode, "abelian or nonabelian");
  extend->add_option("--omega", o.omega, "cochains NAME1, NAME2 from g to the module");
  extend->add_option("--theta", o.theta, "cochains NAME1, NAME2: brackets on the module (nonabelian)");
  extend->add_option("--xi", o.xi, "operator NAME (module x algebra) for a gauge transform");
  auto* poisson = app.add_subcommand("poisson", "reduced cohomology with Lie-Poisson polynomial coefficients");
  common(poisson, true);
  poisson->add_option("--poly-degree", o.poly_degree, "largest polynomial degree");
  poisson->add_option("--max-degree", o.max_degree, "highest cochain degree");
  auto* props = app.add_subcommand("properties", "randomized identity checks");
  common(props, false);
  props->add_option("--seed", o.seed, "random seed");
  props->add_option("--count", o.count, "number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    CLI::App* sub = app.get_subcommands().front();
    report.body["command"] = sub->get_name();
    if (sub == props) {
      cmd_properties(o, report);
    } else {
      report.body["input"] = o.file;
      const AlgebraDocument doc = load(o.file);
      report.body["dim"] = doc.dim;
      if (sub == check) cmd_check(doc, o, report);
      if (sub == coh) cmd_cohomology(doc, o, report);
      if (sub == deform) cmd_deform(doc, o, report);
      if (sub == extend) cmd_extend(doc, o, report);
      if (sub == poisson) cmd_poisson(doc, o, report);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  report.body["status"] = report.failed ? "fail" : "ok";
  if (o.timing)
    report.body["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << render(report.body, o.format);
  return report.failed ? 1 : 0;
}
