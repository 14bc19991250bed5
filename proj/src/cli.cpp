#include "pdda/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pdda/embedding.hpp"
#include "pdda/json_io.hpp"
#include "pdda/poly_io.hpp"
#include "pdda/qmatrix.hpp"

namespace pdda {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw value_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string var_key(int v) { return "X" + std::to_string(v + 1); }

ordered_json failure_json(const CheckFailure& failure) {
  ordered_json j;
  j["clause"] = failure.clause;
  ordered_json idx = ordered_json::array();
  for (int v : failure.indices) idx.push_back(v + 1);
  j["indices"] = std::move(idx);
  j["residual"] = to_string(failure.residual);
  return j;
}

struct Budgets {
  GroebnerOptions groebner;
  int nilpotence_cap = 64;
};

Budgets env_budgets() {
  Budgets b;
  if (const char* v = std::getenv("PDDA_SPAIR_BUDGET"))
    b.groebner.spair_budget = static_cast<std::size_t>(std::stoull(v));
  if (const char* v = std::getenv("PDDA_NILPOTENCE_CAP")) b.nilpotence_cap = std::stoi(v);
  return b;
}

struct Emitter {
  bool json = false;
  bool csv = false;
  std::ostringstream text;
  ordered_json doc;

  std::string render() {
    if (json) return doc.dump(2) + "\n";
    return text.str();
  }
};

int verify_command(const std::string& path, int spot, std::uint64_t seed, const Budgets& budgets,
                   Emitter& em) {
  PoissonPresentation pres = parse_presentation(read_file(path));
  pres.nilpotence_cap = budgets.nilpotence_cap;
  em.doc["command"] = "verify";

  AxiomReport axioms = verify_poisson_axioms(pres);
  if (!axioms.pass) {
    em.doc["status"] = "FAIL";
    em.doc["failure"] = failure_json(*axioms.failure);
    em.text << "FAIL " << axioms.failure->clause << " at (";
    for (std::size_t t = 0; t < axioms.failure->indices.size(); ++t)
      em.text << (t ? "," : "") << axioms.failure->indices[t] + 1;
    em.text << "): residual " << to_string(axioms.failure->residual) << "\n";
    return 1;
  }

  ClassPReport classp = verify_class_p(pres, spot, seed);
  if (!classp.pass) {
    em.doc["status"] = "FAIL";
    em.doc["failure"] = failure_json(*classp.failure);
    em.text << "FAIL " << classp.failure->clause << " at (";
    for (std::size_t t = 0; t < classp.failure->indices.size(); ++t)
      em.text << (t ? "," : "") << classp.failure->indices[t] + 1;
    em.text << "): residual " << to_string(classp.failure->residual) << "\n";
    return 1;
  }

  em.doc["status"] = "PASS";
  ordered_json eta, bounds;
  for (const auto& [i, value] : classp.eta) eta[var_key(i)] = value.str();
  for (const auto& [i, value] : classp.bounds) bounds[var_key(i)] = value;
  em.doc["eta"] = std::move(eta);
  em.doc["bounds"] = std::move(bounds);
  em.text << "PASS\n";
  for (const auto& [i, value] : classp.eta)
    em.text << "eta " << var_key(i) << " = " << value.str() << "\n";
  for (const auto& [i, value] : classp.bounds)
    em.text << "bound " << var_key(i) << " = " << value << "\n";
  return 0;
}

ordered_json trace_steps_json(const DdaTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const DdaStepRecord& rec : trace.steps()) {
    ordered_json change;
    for (int v = 0; v < rec.input.n; ++v) {
      const Polynomial& expr = rec.change[static_cast<std::size_t>(v)];
      if (expr == rec.input.var(v)) continue;
      change[var_key(v)] = to_string(expr);
    }
    steps.push_back({{"j", rec.step + 1},
                     {"eta", rec.eta.str()},
                     {"bound", rec.bound},
                     {"change", std::move(change)}});
  }
  return steps;
}

ordered_json lambda_json(const std::vector<std::vector<Scalar>>& lam) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : lam) {
    ordered_json r = ordered_json::array();
    for (const Scalar& s : row) r.push_back(s.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

int run_command(const std::string& path, const Budgets& budgets, Emitter& em) {
  PoissonPresentation pres = parse_presentation(read_file(path));
  pres.nilpotence_cap = budgets.nilpotence_cap;
  em.doc["command"] = "run";

  AxiomReport axioms = verify_poisson_axioms(pres);
  ClassPReport classp = verify_class_p(pres);
  if (!axioms.pass || !classp.pass) {
    const CheckFailure& failure = axioms.pass ? *classp.failure : *axioms.failure;
    em.doc["status"] = "FAIL";
    em.doc["failure"] = failure_json(failure);
    em.text << "FAIL " << failure.clause << "\n";
    return 1;
  }

  DdaTrace trace = dda_run(pres);
  em.doc["status"] = "PASS";
  em.doc["steps"] = trace_steps_json(trace);
  em.doc["lambda_bar"] = lambda_json(trace.lambda_bar());
  ordered_json ts = ordered_json::array();
  for (int v = 0; v < pres.n; ++v) {
    const RationalExpression& t = trace.t_expression(v);
    ts.push_back({{"num", to_string(t.num())}, {"den", to_string(t.den())}});
  }
  em.doc["T"] = std::move(ts);

  for (const DdaStepRecord& rec : trace.steps()) {
    em.text << "step j=" << rec.step + 1 << " eta=" << rec.eta.str() << " bound=" << rec.bound
            << "\n";
    for (int v = 0; v < rec.input.n; ++v) {
      const Polynomial& expr = rec.change[static_cast<std::size_t>(v)];
      if (expr == rec.input.var(v)) continue;
      em.text << "  " << var_key(v) << " -> " << to_string(expr) << "\n";
    }
  }
  em.text << "lambda_bar:\n";
  for (const auto& row : trace.lambda_bar()) {
    em.text << " ";
    for (const Scalar& s : row) em.text << " " << s.str();
    em.text << "\n";
  }
  for (int v = 0; v < pres.n; ++v) {
    const RationalExpression& t = trace.t_expression(v);
    em.text << "T" << v + 1 << " = " << to_string(t, 'X') << "\n";
  }
  return 0;
}

int express_command(const std::string& path, int index, const Budgets& budgets, Emitter& em) {
  PoissonPresentation pres = parse_presentation(read_file(path));
  pres.nilpotence_cap = budgets.nilpotence_cap;
  DdaTrace trace = dda_run(pres);
  if (index < 1 || index > pres.n) throw value_error("index out of range");
  const RationalExpression& t = express_T_in_X(trace, index - 1);
  em.doc["command"] = "express";
  em.doc["status"] = "PASS";
  em.doc["index"] = index;
  em.doc["num"] = to_string(t.num());
  em.doc["den"] = to_string(t.den());
  em.text << "T" << index << " = " << to_string(t, 'X') << "\n";
  return 0;
}

int bracket_command(const std::string& path, const std::string& lhs, const std::string& rhs,
                    Emitter& em) {
  PoissonPresentation pres = parse_presentation(read_file(path));
  Polynomial f = parse_polynomial(lhs, pres.field, pres.n, true);
  Polynomial g = parse_polynomial(rhs, pres.field, pres.n, true);
  RationalExpression result =
      bracket(pres, as_fraction(f), as_fraction(g)).simplified();
  em.doc["command"] = "bracket";
  em.doc["status"] = "PASS";
  em.doc["num"] = to_string(result.num());
  em.doc["den"] = to_string(result.den());
  em.text << to_string(result, 'X') << "\n";
  return 0;
}

int closure_command(const std::string& path, const std::string& ideal_text,
                    const Budgets& budgets, Emitter& em) {
  PoissonPresentation pres = parse_presentation(read_file(path));
  auto gens = parse_polynomial_list(ideal_text, pres.field, pres.n, false);
  IdealPresentation I = IdealPresentation::in(pres, std::move(gens));
  IdealPresentation closed = poisson_closure(I, budgets.groebner);
  em.doc["command"] = "closure";
  em.doc["status"] = "PASS";
  ordered_json basis = ordered_json::array();
  for (const Polynomial& g : closed.basis(MonomialOrder::grevlex(), budgets.groebner).elements())
    basis.push_back(to_string(g));
  em.doc["basis"] = basis;
  for (const auto& entry : basis) em.text << entry.get<std::string>() << "\n";
  return 0;
}

ordered_json diagram_json(const std::set<int>& diagram) {
  ordered_json out = ordered_json::array();
  for (int v : diagram) out.push_back(v + 1);
  return out;
}

int phi_command(const std::string& path, const std::string& prime_text, bool assert_prime,
                bool diagram_only, const Budgets& budgets, Emitter& em) {
  if (!assert_prime) throw value_error("--assert-prime is required: primality is not tested");
  PoissonPresentation pres = parse_presentation(read_file(path));
  pres.nilpotence_cap = budgets.nilpotence_cap;
  DdaTrace trace = dda_run(pres);

  std::vector<Polynomial> gens;
  if (prime_text != "0")
    gens = parse_polynomial_list(prime_text, pres.field, pres.n, false);
  PrimeCandidate P =
      PrimeCandidate::make(IdealPresentation::in(pres, std::move(gens)), true, budgets.groebner);
  if (!P.poisson_verified()) throw value_error("ideal is not bracket-stable");

  EmbeddingResult result = phi(P, trace, budgets.groebner);
  em.doc["command"] = diagram_only ? "stratum" : "phi";
  em.doc["status"] = "PASS";
  em.doc["assert_prime"] = true;
  em.doc["diagram"] = diagram_json(result.diagram);
  if (!diagram_only) {
    ordered_json gens_json = ordered_json::array();
    for (const Polynomial& g : result.generators) gens_json.push_back(to_string(g, 'T'));
    em.doc["generators"] = std::move(gens_json);
    ordered_json word = ordered_json::array();
    for (const auto& [step, eps] : result.branch_word)
      word.push_back({{"j", step + 1}, {"eps", eps}});
    em.doc["branch_word"] = std::move(word);
  }

  em.text << "diagram {";
  bool first = true;
  for (int v : result.diagram) {
    em.text << (first ? "" : ",") << v + 1;
    first = false;
  }
  em.text << "}\n";
  if (!diagram_only) {
    for (const Polynomial& g : result.generators) em.text << to_string(g, 'T') << "\n";
  }
  return 0;
}

int im_member_command(const std::string& path, const std::string& ideal_text, bool assert_prime,
                      const Budgets& budgets, Emitter& em) {
  if (!assert_prime) throw value_error("--assert-prime is required: primality is not tested");
  PoissonPresentation pres = parse_presentation(read_file(path));
  pres.nilpotence_cap = budgets.nilpotence_cap;
  DdaTrace trace = dda_run(pres);
  const PoissonPresentation& final_pres = trace.final_presentation();

  std::vector<Polynomial> gens;
  if (ideal_text != "0")
    gens = parse_polynomial_list(ideal_text, final_pres.field, final_pres.n, false);
  PrimeCandidate Q = PrimeCandidate::make(
      IdealPresentation(std::make_shared<PoissonPresentation>(final_pres), std::move(gens)), true,
      budgets.groebner);
  if (!Q.poisson_verified()) throw value_error("ideal is not bracket-stable");

  MembershipCertificate cert = im_phi_membership(Q, trace, budgets.groebner);
  em.doc["command"] = "im-member";
  em.doc["assert_prime"] = true;
  em.doc["member"] = cert.member;
  if (cert.member) {
    em.doc["status"] = "PASS";
    ordered_json pre = ordered_json::array();
    for (const Polynomial& g : cert.preimage) pre.push_back(to_string(g));
    em.doc["preimage"] = std::move(pre);
    em.text << "member\n";
    for (const Polynomial& g : cert.preimage)
      em.text << "preimage: " << to_string(g) << "\n";
    return 0;
  }
  em.doc["status"] = "FAIL";
  em.doc["failing_j"] = cert.failing_step + 1;
  em.doc["witness"] = to_string(*cert.witness, 'T');
  em.text << "not a member: step j=" << cert.failing_step + 1 << " needs "
          << to_string(*cert.witness, 'T') << "\n";
  return 1;
}

int qmatrix_command(int rows, int cols, const std::string& mode, Emitter& em) {
  em.doc["command"] = "qmatrix";
  em.doc["rows"] = rows;
  em.doc["cols"] = cols;
  em.doc["status"] = "PASS";

  if (mode == "lambda") {
    DdaTrace trace = dda_run(matrix_poisson(rows, cols));
    em.doc["lambda_bar"] = lambda_json(trace.lambda_bar());
    for (const auto& row : trace.lambda_bar()) {
      for (std::size_t c = 0; c < row.size(); ++c) em.text << (c ? " " : "") << row[c].str();
      em.text << "\n";
    }
    return 0;
  }

  if (mode == "diagrams") {
    auto diagrams = enumerate_diagrams(rows, cols);
    em.doc["count"] = diagrams.size();
    ordered_json list = ordered_json::array();
    for (const GridDiagram& w : diagrams) list.push_back(w.bitstring());
    em.doc["diagrams"] = std::move(list);
    if (em.csv) {
      em.text << "diagram\n";
      for (const GridDiagram& w : diagrams) em.text << w.bitstring() << "\n";
    } else {
      em.text << diagrams.size() << " diagrams\n";
      for (const GridDiagram& w : diagrams) em.text << w.bitstring() << "\n";
    }
    return 0;
  }

  auto reports = strata_table(rows, cols);
  ordered_json list = ordered_json::array();
  for (const StratumReport& r : reports)
    list.push_back({{"diagram", r.diagram.bitstring()}, {"r", r.r}, {"rank", r.rank}, {"s", r.s}});
  em.doc["strata"] = std::move(list);
  ordered_json counts;
  for (const auto& [s, count] : stratum_counts(reports)) counts[std::to_string(s)] = count;
  em.doc["counts"] = std::move(counts);

  if (em.csv) {
    em.text << "diagram,r,rank,s\n";
    for (const StratumReport& r : reports)
      em.text << r.diagram.bitstring() << "," << r.r << "," << r.rank << "," << r.s << "\n";
  } else {
    for (const StratumReport& r : reports)
      em.text << r.diagram.bitstring() << " r=" << r.r << " rank=" << r.rank << " s=" << r.s
              << "\n";
    em.text << "counts per s:";
    for (const auto& [s, count] : stratum_counts(reports))
      em.text << " s=" << s << ":" << count;
    em.text << "\n";
  }
  return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  CLI::App app{"Exact toolkit for iterated Poisson-Ore towers: derivation "
               "removal, spectra embedding, and matrix strata"};
  app.require_subcommand(1);

  Budgets budgets = env_budgets();
  bool json = false, csv = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string path, lhs, rhs, ideal_text, prime_text = "0";
  int index = 1, rows = 1, cols = 1, spot = 0;
  std::uint64_t seed = 0;
  bool assert_prime = false;

  auto add_budgets = [&](CLI::App* cmd) {
    cmd->add_option("--spair-budget", budgets.groebner.spair_budget, "S-pair budget");
    cmd->add_option("--nilpotence-cap", budgets.nilpotence_cap, "nilpotence cap");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the Poisson axioms and class membership");
  verify->add_option("file", path)->required();
  verify->add_option("--spot-check", spot, "random degree-2 pair rounds");
  verify->add_option("--seed", seed, "seed for the randomized spot checks");
  add_budgets(verify);

  CLI::App* run = app.add_subcommand("run", "run the derivation-removal algorithm");
  run->add_option("file", path)->required();
  add_budgets(run);

  CLI::App* express = app.add_subcommand("express", "final generator in the original variables");
  express->add_option("file", path)->required();
  express->add_option("--index", index, "1-based generator index")->required();
  add_budgets(express);

  CLI::App* brk = app.add_subcommand("bracket", "evaluate a Poisson bracket");
  brk->add_option("file", path)->required();
  brk->add_option("--lhs", lhs)->required();
  brk->add_option("--rhs", rhs)->required();

  CLI::App* closure = app.add_subcommand("closure", "smallest Poisson ideal containing the input");
  closure->add_option("file", path)->required();
  closure->add_option("--ideal", ideal_text)->required();
  add_budgets(closure);

  CLI::App* phi_cmd = app.add_subcommand("phi", "canonical embedding of a presented prime");
  phi_cmd->add_option("file", path)->required();
  phi_cmd->add_option("--prime", prime_text)->required();
  phi_cmd->add_flag("--assert-prime", assert_prime);
  add_budgets(phi_cmd);

  CLI::App* stratum = app.add_subcommand("stratum", "diagram of a presented prime");
  stratum->add_option("file", path)->required();
  stratum->add_option("--prime", prime_text)->required();
  stratum->add_flag("--assert-prime", assert_prime);
  add_budgets(stratum);

  CLI::App* im = app.add_subcommand("im-member", "membership in the embedding image");
  im->add_option("file", path)->required();
  im->add_option("--ideal", ideal_text)->required();
  im->add_flag("--assert-prime", assert_prime);
  add_budgets(im);

  CLI::App* qm = app.add_subcommand("qmatrix", "matrix Poisson structure reports");
  qm->add_option("--rows", rows)->required();
  qm->add_option("--cols", cols)->required();
  bool want_lambda = false, want_diagrams = false, want_strata = false;
  qm->add_flag("--lambda", want_lambda);
  qm->add_flag("--diagrams", want_diagrams);
  qm->add_flag("--strata", want_strata);
  qm->add_flag("--csv", csv, "CSV output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  Emitter em;
  em.json = json;
  em.csv = csv;

  try {
    int code = 0;
    if (verify->parsed()) code = verify_command(path, spot, seed, budgets, em);
    else if (run->parsed()) code = run_command(path, budgets, em);
    else if (express->parsed()) code = express_command(path, index, budgets, em);
    else if (brk->parsed()) code = bracket_command(path, lhs, rhs, em);
    else if (closure->parsed()) code = closure_command(path, ideal_text, budgets, em);
    else if (phi_cmd->parsed()) code = phi_command(path, prime_text, assert_prime, false, budgets, em);
    else if (stratum->parsed()) code = phi_command(path, prime_text, assert_prime, true, budgets, em);
    else if (im->parsed()) code = im_member_command(path, ideal_text, assert_prime, budgets, em);
    else if (qm->parsed()) {
      int modes = (want_lambda ? 1 : 0) + (want_diagrams ? 1 : 0) + (want_strata ? 1 : 0);
      if (modes > 1) throw value_error("choose one of --lambda, --diagrams, --strata");
      std::string mode = want_lambda ? "lambda" : want_diagrams ? "diagrams" : "strata";
      code = qmatrix_command(rows, cols, mode, em);
    }
    result.out = em.render();
    result.exit_code = code;
    return result;
  } catch (const resource_error& e) {
    em.doc["status"] = "ERROR";
    em.doc["error"] = e.what();
    result.out = em.json ? em.doc.dump(2) + "\n" : "";
    result.err = std::string("ERROR: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  } catch (const std::exception& e) {
    em.doc["status"] = "ERROR";
    em.doc["error"] = e.what();
    result.out = em.json ? em.doc.dump(2) + "\n" : "";
    result.err = std::string("ERROR: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  }
}

}  // namespace pdda
