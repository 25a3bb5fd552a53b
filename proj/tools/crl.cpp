// crl: coincident root loci from the command line.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crl/charring.hpp"
#include "crl/covariants.hpp"
#include "crl/encomplex.hpp"
#include "crl/error.hpp"
#include "crl/ideal_la.hpp"
#include "crl/partitions.hpp"

using nlohmann::json;
using namespace crl;

namespace {

constexpr int kSchemaVersion = 1;

struct Report {
  std::string command;
  json partition = nullptr;
  json parameters = json::object();
  json results = json::object();
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;
  bool certified = true;
  std::ostringstream text;
};

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::size_t ambient_budget(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CRL_MAX_DIM")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string("CRL_MAX_DIM must be a positive integer, got \"") + env + "\"");
    }
  }
  return KernelOptions{}.max_ambient_dim;
}

void cmd_degree(Report& r, const Partition& lambda) {
  const Integer a = crl_degree(lambda);
  const Integer b = de_jonquieres_degree(lambda);
  if (a != b)
    throw MismatchError("degree formula gives " + to_string(a) + " but the De Jonquieres coefficient gives " +
                        to_string(b));
  r.results["crl_degree"] = {{"value", integer_json(a)}, {"method", "formula"}};
  r.results["de_jonquieres_degree"] = {{"value", integer_json(b)}, {"method", "formula"}};
  r.text << "X" << lambda.to_string() << " in P^" << lambda.degree() << ": dimension " << lambda.num_parts()
         << ", degree " << to_string(a) << " (both methods agree)\n";
}

void print_merge(std::ostream& os, const char* name, const std::vector<MergeEntry>& entries) {
  os << "  case " << name << ":";
  if (entries.empty()) os << " none";
  for (const auto& e : entries) os << " " << e.merged.to_string();
  os << "\n";
}

void cmd_singular(Report& r, const Partition& lambda) {
  const MergeSet s = singular_merge_set(lambda);
  json j = to_json(s);
  j["method"] = "formula";
  j["empty"] = s.empty();
  r.results["singular_merge_set"] = j;
  r.text << "Singular locus of X" << lambda.to_string() << ":" << (s.empty() ? " empty (X is smooth)" : "") << "\n";
  if (!s.empty()) {
    print_merge(r.text, "a", s.case_a);
    print_merge(r.text, "b", s.case_b);
    print_merge(r.text, "c", s.case_c);
  }
}

struct IdealArgs {
  std::string method = "both";
  int gens_up_to = 0;
  bool basis = false;
  bool groebner = false;
  double groebner_timeout = GroebnerOptions{}.timeout_s;
  std::optional<std::size_t> max_dim;
};

void cmd_ideal(Report& r, const Partition& lambda, int m, const IdealArgs& args) {
  if (m < 1) throw ValidationError("m must be at least 1");
  KernelOptions ko;
  ko.max_ambient_dim = ambient_budget(args.max_dim);
  r.parameters["max_ambient_dim"] = ko.max_ambient_dim;

  bool want_predict = args.method != "kernel";
  bool want_kernel = args.method != "predict";

  std::optional<IdealPrediction> prediction;
  if (want_predict) {
    try {
      prediction = predict_ideal(lambda, m);
      r.assumptions = prediction->assumptions;
      r.results["prediction"] = to_json(*prediction);
    } catch (const UnsupportedError& e) {
      r.warnings.push_back(std::string(e.what()) + "; falling back to kernel-only mode");
      want_kernel = true;
    } catch (const InconsistencyError& e) {
      r.warnings.push_back(std::string(e.what()) + "; falling back to kernel-only mode");
      want_kernel = true;
    }
  }

  std::optional<GradedPiece> piece;
  if (want_kernel) {
    std::optional<GradedPiece> lower;
    if (m > 1) lower = graded_piece_kernel(lambda, m - 1, ko);
    piece = graded_piece_kernel(lambda, m, ko);
    const GradedPieceReport rep = make_report(*piece, lower ? &*lower : nullptr);
    json j = to_json(rep);
    if (args.basis) {
      json polys = json::array();
      for (const auto& p : kernel_polynomials(*piece)) polys.push_back(p.to_string());
      j["basis"] = polys;
    }
    r.results["kernel"] = j;
    r.certified = r.certified && rep.certified;
  }

  if (prediction && piece) {
    const Character k = kernel_character(*piece);
    const bool agree = k == prediction->predicted;
    r.results["agreement"] = {{"agree", agree}, {"method", "linear-algebra"}};
    if (!agree)
      throw MismatchError("predicted " + prediction->predicted.to_string() + " but the kernel has character " +
                          k.to_string());
  }

  if (args.gens_up_to > 0) {
    json g = json::object();
    for (const auto& [deg, n] : minimal_generators_by_degree(lambda, args.gens_up_to, ko))
      g[std::to_string(deg)] = n;
    r.results["minimal_generators"] = {{"by_degree", g}, {"method", "linear-algebra"}};
  }

  if (args.groebner) {
    GroebnerOptions go;
    go.timeout_s = args.groebner_timeout;
    const GroebnerResult gr = groebner_eliminate(lambda, go);
    json j = to_json(gr);
    if (gr.completed) {
      const std::size_t dim = ideal_dimension_in_degree(gr.generators, lambda.degree(), m);
      j["dim_ideal"] = dim;
      if (piece && dim != piece->dim_ideal())
        throw MismatchError("Groebner elimination gives dim " + std::to_string(dim) + " but the kernel has dim " +
                            std::to_string(piece->dim_ideal()));
    } else {
      r.warnings.push_back("Groebner elimination did not finish: " + gr.status);
    }
    r.results["groebner"] = j;
  }

  r.text << "(I_X)_" << m << " for X" << lambda.to_string() << "\n";
  if (prediction) {
    r.text << "  euler characteristic : " << prediction->euler.to_string() << "\n";
    r.text << "  D correction         : " << prediction->d_correction.to_string() << "\n";
    r.text << "  predicted            : " << prediction->predicted.to_string() << "  (dim "
           << prediction->predicted.dim() << ")\n";
  }
  if (piece) {
    const Character k = kernel_character(*piece);
    r.text << "  kernel               : " << k.to_string() << "  (dim " << piece->dim_ideal() << " of "
           << piece->dim_ambient() << ", " << (piece->certified ? "certified" : "uncertified") << ")\n";
    r.text << "  hilbert function     : " << piece->dim_ambient() - piece->dim_ideal() << "\n";
    if (r.results["kernel"].contains("minimal_generators") && !r.results["kernel"]["minimal_generators"].is_null())
      r.text << "  new generators       : " << r.results["kernel"]["minimal_generators"].get<std::size_t>() << "\n";
  }
  if (r.results.contains("agreement")) r.text << "  prediction and kernel agree\n";
  if (r.results.contains("minimal_generators")) {
    r.text << "  minimal generators   :";
    for (const auto& [k, v] : r.results["minimal_generators"]["by_degree"].items()) r.text << " " << k << ":" << v;
    r.text << "\n";
  }
  if (r.results.contains("groebner")) {
    const auto& g = r.results["groebner"];
    r.text << "  groebner             : " << g["status"].get<std::string>();
    if (g.contains("dim_ideal")) r.text << ", dim " << g["dim_ideal"];
    r.text << "\n";
  }
}

void cmd_covariants(Report& r, int d, const std::optional<Partition>& lambda, const std::vector<std::string>& calibrate,
                    const std::vector<std::string>& exprs) {
  if (calibrate.empty() && exprs.empty()) {
    if (!lambda) throw ValidationError("a partition is required to list the criterion table");
    json entries = json::array();
    r.text << "Covariants vanishing on X" << lambda->to_string() << " (d = " << d << ")\n";
    for (const auto& e : criterion_table(d, *lambda)) {
      for (const auto& c : e.covariants) {
        const bool vanishes = vanishes_on_locus(c.expr, *lambda);
        entries.push_back({{"m", e.m},
                           {"expression", c.text},
                           {"type", {c.expr.p, c.expr.q}},
                           {"vanishes", vanishes},
                           {"nonzero", !c.expr.is_zero()},
                           {"method", "formula"}});
        r.text << "  I_" << e.m << "  " << c.text << "  type (" << c.expr.p << "," << c.expr.q << ")  "
               << (vanishes ? "vanishes" : "DOES NOT VANISH") << "\n";
        if (!vanishes) r.certified = false;
      }
    }
    r.results["criterion_table"] = entries;
    return;
  }
  if (!exprs.empty()) {
    json out = json::array();
    for (const auto& text : exprs) {
      const CovariantExpr c = parse_covariant(text, d);
      json j{{"expression", text}, {"type", {c.p, c.q}}, {"nonzero", !c.is_zero()}, {"method", "formula"}};
      r.text << "  " << text << "  type (" << c.p << "," << c.q << ")";
      if (lambda) {
        const bool v = vanishes_on_locus(c, *lambda);
        j["vanishes"] = v;
        r.text << (v ? "  vanishes" : "  does not vanish");
      }
      r.text << "\n";
      out.push_back(j);
    }
    r.results["expressions"] = out;
  }
  if (!calibrate.empty()) {
    if (!lambda) throw ValidationError("calibration needs a partition");
    std::vector<CovariantExpr> basis;
    for (const auto& text : calibrate) basis.push_back(parse_covariant(text, d));
    json vecs = json::array();
    r.text << "Relations on X" << lambda->to_string() << " among [";
    for (std::size_t i = 0; i < calibrate.size(); ++i) r.text << (i ? ", " : "") << calibrate[i];
    r.text << "]:\n";
    const auto rel = calibrate_combination(basis, *lambda);
    if (rel.empty()) r.text << "  none\n";
    for (const auto& v : rel) {
      json row = json::array();
      r.text << " ";
      for (std::size_t i = 0; i < v.size(); ++i) {
        row.push_back(integer_json(v[i]));
        r.text << (i ? " : " : " ") << v[i].get_str();
      }
      r.text << "\n";
      vecs.push_back(row);
    }
    r.results["calibration"] = {{"basis", calibrate}, {"relations", vecs}, {"method", "linear-algebra"}};
  }
}

void cmd_char(Report& r, const std::string& op, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw ValidationError("char " + op + " takes " + std::to_string(n) + " arguments, got " + std::to_string(args.size()));
  };
  auto as_int = [](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw ValidationError("expected an integer, got \"" + s + "\"");
    return v;
  };
  Character c;
  if (op == "cg") {
    need(2);
    c = cg_tensor(as_int(args[0]), as_int(args[1]));
  } else if (op == "pleth") {
    need(2);
    c = plethysm_sym_sym(as_int(args[0]), as_int(args[1]));
  } else if (op == "wedge") {
    need(2);
    c = wedge_sym(as_int(args[0]), as_int(args[1]));
  } else if (op == "tensor") {
    need(2);
    c = tensor(parse_character(args[0]), parse_character(args[1]));
  } else if (op == "dim") {
    need(1);
    c = parse_character(args[0]);
  } else {
    throw ValidationError("unknown char operation \"" + op + "\" (cg, pleth, wedge, tensor, dim)");
  }
  json j = to_json(c);
  j["method"] = "formula";
  r.results["character"] = j;
  r.parameters["op"] = op;
  r.parameters["args"] = args;
  r.text << c.to_string() << "  (dim " << c.dim() << ")\n";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return 2;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
  if (dynamic_cast<const MismatchError*>(&e)) return 4;
  if (dynamic_cast<const UnsupportedError*>(&e)) return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincident root loci: degrees, singular loci, ideal characters, covariants"};
  app.require_subcommand(1);
  bool as_json = false;
  bool timing = false;
  app.add_flag("--json", as_json, "Emit the JSON report envelope");
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");
  app.fallthrough();

  std::string lambda_text;
  auto* degree = app.add_subcommand("degree", "Degree of X_lambda by two formulas");
  degree->add_option("partition", lambda_text, "Partition, e.g. 3,2,2")->required();

  auto* singular = app.add_subcommand("singular", "Partitions whose loci form the singular locus");
  singular->add_option("partition", lambda_text, "Partition")->required();

  int m = 0;
  IdealArgs ideal_args;
  std::size_t max_dim = 0;
  auto* ideal = app.add_subcommand("ideal", "Character of the graded piece (I_X)_m");
  ideal->add_option("partition", lambda_text, "Partition")->required();
  ideal->add_option("m", m, "Degree")->required();
  ideal->add_option("--method", ideal_args.method, "predict, kernel or both")
      ->check(CLI::IsMember({"predict", "kernel", "both"}));
  ideal->add_option("--gens-up-to", ideal_args.gens_up_to, "Count new generators in degrees 1..M");
  ideal->add_flag("--basis", ideal_args.basis, "Export the kernel basis polynomials");
  ideal->add_flag("--groebner", ideal_args.groebner, "Cross-check with Groebner elimination");
  ideal->add_option("--groebner-timeout", ideal_args.groebner_timeout, "Seconds");
  auto* max_dim_opt = ideal->add_option("--max-dim", max_dim, "Ambient dimension budget (overrides CRL_MAX_DIM)");

  int d = 0;
  std::string cov_lambda;
  std::vector<std::string> calibrate;
  std::vector<std::string> exprs;
  auto* cov = app.add_subcommand("covariants", "Vanishing covariants and calibrations");
  cov->add_option("d", d, "Degree of the binary form")->required();
  cov->add_option("partition", cov_lambda, "Partition of d");
  cov->add_option("--calibrate", calibrate, "Covariant expressions of equal type");
  cov->add_option("--expr", exprs, "Covariant expressions to evaluate");

  std::string op;
  std::vector<std::string> char_args;
  auto* chr = app.add_subcommand("char", "Character ring operations");
  chr->add_option("op", op, "cg M N | pleth M N | wedge K N | tensor A B | dim A")->required();
  chr->add_option("args", char_args, "Operands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (degree->parsed()) {
      r.command = "degree";
      const Partition lambda = Partition::parse(lambda_text);
      r.partition = to_json(lambda);
      cmd_degree(r, lambda);
    } else if (singular->parsed()) {
      r.command = "singular";
      const Partition lambda = Partition::parse(lambda_text);
      r.partition = to_json(lambda);
      cmd_singular(r, lambda);
    } else if (ideal->parsed()) {
      r.command = "ideal";
      const Partition lambda = Partition::parse(lambda_text);
      r.partition = to_json(lambda);
      if (max_dim_opt->count()) ideal_args.max_dim = max_dim;
      r.parameters = {{"m", m}, {"method", ideal_args.method}, {"gens_up_to", ideal_args.gens_up_to}};
      cmd_ideal(r, lambda, m, ideal_args);
    } else if (cov->parsed()) {
      r.command = "covariants";
      std::optional<Partition> lambda;
      if (!cov_lambda.empty()) {
        lambda = Partition::parse(cov_lambda);
        if (lambda->degree() != d)
          throw ValidationError("partition " + lambda->to_string() + " is not a partition of " + std::to_string(d));
        r.partition = to_json(*lambda);
      }
      r.parameters = {{"d", d}};
      cmd_covariants(r, d, lambda, calibrate, exprs);
    } else if (chr->parsed()) {
      r.command = "char";
      cmd_char(r, op, char_args);
    }
  } catch (const std::exception& e) {
    const int rc = exit_code_for(e);
    if (as_json) {
      json err{{"schema_version", kSchemaVersion},
               {"command", r.command},
               {"error", {{"message", e.what()}, {"exit_code", rc}}}};
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "crl: " << e.what() << "\n";
    return rc;
  }

  if (as_json) {
    json env{{"schema_version", kSchemaVersion},
             {"command", r.command},
             {"partition", r.partition},
             {"parameters", r.parameters},
             {"results", r.results},
             {"assumptions", r.assumptions},
             {"warnings", r.warnings},
             {"certified", r.certified}};
    if (timing)
      env["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    std::cout << env.dump(2) << "\n";
  } else {
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << r.text.str();
    if (timing)
      std::cout << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                << " s\n";
  }
  return 0;
}
