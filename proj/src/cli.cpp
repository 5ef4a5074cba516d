// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclomat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cyclomat/bipartite.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/duality.hpp"
#include "cyclomat/matroid.hpp"
#include "cyclomat/simplicial.hpp"

namespace cyclomat::cli {

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
  if (v.fits_slong_p() && std::numeric_limits<long>::digits >= 63)
    return Json(v.get_si());
  return Json(v.get_str());
}

// Output of one verb: a JSON payload, the equivalent plain text, and whether
// a verification failed.
struct Outcome {
  Json result = Json::object();
  std::string text;
  bool failed = false;
};

struct GlobalFlags {
  bool json = false;
  unsigned threads = 0;
  std::size_t limit_bits = 0;  // 0 = library defaults
  bool list = false;

  SweepOptions options() const {
    SweepOptions o;
    o.threads = threads;
    if (limit_bits != 0) {
      o.limits.basis_ground = limit_bits;
      o.limits.tutte_ground = limit_bits;
      o.limits.forest_edges = limit_bits;
      o.limits.exhaustive_duality_n = limit_bits;
    }
    return o;
  }
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) s += sep;
    s += parts[i];
  }
  return s;
}

Outcome from_report(const VerificationReport& report) {
  Outcome o;
  o.result = Json::parse(to_json(report));
  o.failed = !report.pass;
  std::ostringstream text;
  text << "claim: " << report.claim << "\n";
  text << "pass: " << (report.pass ? "true" : "false") << "\n";
  if (report.witness) {
    text << "witness:";
    for (auto w : *report.witness) text << ' ' << w;
    text << "\n";
  }
  if (report.witness_note) text << "witness_note: " << *report.witness_note << "\n";
  for (const auto& [name, value] : report.stats)
    text << name << ": " << value << "\n";
  o.text = text.str();
  return o;
}

int emit(const std::string& verb, const Json& echo, const Outcome& outcome,
         bool json, std::ostream& out) {
  if (json) {
    Json envelope;
    envelope["v"] = 1;
    envelope["command"] = {{"verb", verb}, {"args", echo}};
    envelope["result"] = outcome.result;
    out << envelope.dump() << "\n";
  } else {
    out << outcome.text;
  }
  return outcome.failed ? kExitFailed : kExitOk;
}

std::string subset_text(const RepresentedMatroid& m, const GroundSubset& s) {
  std::vector<std::string> names;
  for (auto e : s.elements()) names.push_back(m.labels()[e]);
  return "{" + join(names, ", ") + "}";
}

Outcome do_phi(std::uint64_t n) {
  Outcome o;
  const auto phi = euler_phi(n);
  o.result["phi"] = phi;
  o.text = std::to_string(phi) + "\n";
  return o;
}

Outcome do_cyclo_poly(std::uint64_t n) {
  Outcome o;
  const IntPolynomial p = cyclotomic_polynomial(n);
  o.result["polynomial"] = p.to_string();
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(big(c));
  o.result["coefficients"] = coeffs;
  o.text = p.to_string() + "\n";
  return o;
}

Outcome do_mu_matrix(std::uint64_t n) {
  Outcome o;
  const IntegerMatrix a = cyclotomic_matrix(n);
  const RepresentedMatroid m = cyclotomic_matroid(n);
  o.result["rows"] = a.rows();
  o.result["cols"] = a.cols();
  o.result["labels"] = m.labels();
  Json rows = Json::array();
  std::ostringstream text;
  text << join(m.labels(), " ") << "\n";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      row.push_back(big(a(r, c)));
      cells.push_back(a(r, c).get_str());
    }
    rows.push_back(row);
    text << join(cells, " ") << "\n";
  }
  o.result["matrix"] = rows;
  o.text = text.str();
  return o;
}

Outcome do_bases(std::uint64_t n, const GlobalFlags& g) {
  Outcome o;
  require_within(n, g.options().limits.basis_ground, "bases");
  const RepresentedMatroid m = cyclotomic_matroid(n);
  const BasisEnumeration e = enumerate_bases(m, g.list, g.options());
  o.result["ground_size"] = m.ground_size();
  o.result["rank"] = m.rank();
  o.result["count"] = e.count;
  std::string text = std::to_string(e.count) + "\n";
  if (g.list) {
    Json list = Json::array();
    for (const auto& b : e.bases) {
      list.push_back(b.elements());
      text += subset_text(m, b) + "\n";
    }
    o.result["bases"] = list;
  }
  o.text = text;
  return o;
}

Outcome do_tutte(const RepresentedMatroid& m, const std::string& name,
                 const GlobalFlags& g) {
  Outcome o;
  const TuttePolynomial t = tutte(m, g.options());
  o.result["matroid"] = name;
  o.result["ground_size"] = m.ground_size();
  o.result["rank"] = m.rank();
  o.result["tutte"] = t.to_string();
  o.text = t.to_string() + "\n";
  return o;
}

Outcome do_bolker(const std::vector<std::size_t>& parts) {
  Outcome o;
  const BigInt b = bolker_bound(parts);
  o.result["bound"] = big(b);
  o.text = b.get_str() + "\n";
  return o;
}

Outcome do_adin(const std::vector<std::size_t>& parts, const GlobalFlags& g) {
  const AdinSummary s = adin_sum(parts, g.options());
  VerificationReport r;
  r.claim = "adin";
  r.add_stat("basis_count", std::to_string(s.basis_count));
  r.add_stat("weighted_sum", s.weighted_sum.get_str());
  r.add_stat("bolker_bound", s.bolker_bound.get_str());
  r.add_stat("max_torsion", s.max_torsion.get_str());
  r.add_stat("nontrivial_torsion_bases", std::to_string(s.nontrivial_torsion_bases));
  const std::size_t large =
      std::count_if(parts.begin(), parts.end(), [](auto p) { return p > 2; });
  r.add_stat("basis_count_equals_bound",
             BigInt(static_cast<unsigned long>(s.basis_count)) == s.bolker_bound
                 ? "true"
                 : "false");
  r.add_stat("equality_predicted", large <= 2 ? "true" : "false");
  if (s.weighted_sum != s.bolker_bound) {
    std::vector<std::uint64_t> w(parts.begin(), parts.end());
    r.fail(w, "torsion-weighted basis count differs from the product bound");
  }
  return from_report(r);
}

Outcome do_star_tree(const std::vector<std::size_t>& primes) {
  Outcome o;
  const JoinComplex c(primes);
  const FacetSet tree = star_tree(primes);
  const RepresentedMatroid m = simplicial_matroid(c);
  const bool basis = m.is_basis(tree);
  Json facets = Json::array();
  std::string text;
  for (auto f : tree.elements()) {
    facets.push_back(c.facet_label(f));
    text += c.facet_label(f) + "\n";
  }
  o.result["facet_count"] = tree.size();
  o.result["facets"] = facets;
  o.result["is_basis"] = basis;
  text += "is_basis: " + std::string(basis ? "true" : "false") + "\n";
  if (basis) {
    const HomologySummary h = tree_homology(c, tree);
    o.result["torsion_order"] = big(h.torsion_order);
    text += "torsion_order: " + h.torsion_order.get_str() + "\n";
  }
  o.text = text;
  return o;
}

Outcome do_coboundary(std::size_t p, std::size_t q, const GlobalFlags& g) {
  Outcome o;
  const auto chi = coboundary_polynomial(p, q, g.options());
  const std::string s = chi.to_string({"q", "t"});
  o.result["variables"] = {"q", "t"};
  o.result["coboundary"] = s;
  o.text = s + "\n";
  return o;
}

Outcome do_chromatic(std::size_t p, std::size_t q, const GlobalFlags& g) {
  Outcome o;
  const auto chi = chromatic_polynomial(p, q, g.options());
  const std::string s = chi.to_string({"q"});
  o.result["variables"] = {"q"};
  o.result["chromatic"] = s;
  o.text = s + "\n";
  return o;
}

Outcome do_indep_gf(std::uint64_t n, bool verify, const GlobalFlags& g) {
  const Factorization f = factorize(n);
  if (f.prime_count() != 2)
    throw std::invalid_argument("indep-gf: n must have exactly two prime factors");
  if (verify) return from_report(corollary5_check(n, g.options()));
  Outcome o;
  const auto p1 = f.factors[0].prime, p2 = f.factors[1].prime;
  const LaurentPolynomial egf = indep_gf_from_egf(p1, p2);
  const unsigned power = static_cast<unsigned>(f.cofactor());
  const LaurentPolynomial predicted = egf.pow(power);
  o.result["p1"] = p1;
  o.result["p2"] = p2;
  o.result["egf_coefficient"] = egf.to_string();
  o.result["power"] = power;
  o.result["census"] = predicted.to_string();
  o.text = "egf_coefficient: " + egf.to_string() + "\npower: " +
           std::to_string(power) + "\ncensus: " + predicted.to_string() + "\n";
  return o;
}

Outcome do_forest_enum(std::size_t p, std::size_t q,
                       std::optional<std::size_t> restricted,
                       const GlobalFlags& g) {
  Outcome o;
  if (!restricted) {
    const auto a = forest_enumerator(p, q, g.options());
    o.result["forest_enumerator"] = a.to_string();
    o.text = a.to_string() + "\n";
    return o;
  }
  const std::size_t j = *restricted;
  if (j > q) throw std::invalid_argument("forest-enum: --restricted j needs j <= q");
  const auto a = restricted_forest_enumerator(p, j, g.options());
  const BigInt weight = binomial(q, j);
  o.result["j"] = j;
  o.result["restricted_forest_enumerator"] = a.to_string();
  o.result["weight"] = big(weight);
  o.text = a.to_string() + "\nweight: " + weight.get_str() + "\n";
  return o;
}

Outcome do_corollary2(std::uint64_t n, const GlobalFlags& g) {
  const Corollary2Bound b = corollary2_bound(n);
  const std::uint64_t count = qbasis_count(n, g.options());
  VerificationReport r;
  r.claim = "corollary2";
  r.add_stat("n", std::to_string(n));
  r.add_stat("basis_count", std::to_string(count));
  r.add_stat("bound", b.bound.get_str());
  r.add_stat("equality_predicted", b.equality_predicted ? "true" : "false");
  const BigInt c(static_cast<unsigned long>(count));
  if (c > b.bound) r.fail({n}, "basis count exceeds the bound");
  if (b.equality_predicted && c != b.bound)
    r.fail({n}, "basis count differs from the bound where equality is predicted");
  return from_report(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cyclotomic and simplicial matroid toolkit", "cyclomat"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit one JSON object on stdout");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  app.add_option("--limit-bits", g.limit_bits,
                 "Override every enumeration limit (ground-set size)");
  app.add_flag("--list", g.list, "List bases");

  Json echo = Json::object();
  std::function<Outcome()> action;

  std::uint64_t n = 0;
  std::size_t p = 0, q = 0;
  std::vector<std::size_t> parts;

  auto single_n = [&](const char* verb, const char* help,
                      std::function<Outcome()> fn) {
    auto* sub = app.add_subcommand(verb, help);
    sub->add_option("n", n, "n")->required();
    sub->callback([&, fn] {
      echo["n"] = n;
      action = fn;
    });
    return sub;
  };
  auto pair_pq = [&](const char* verb, const char* help,
                     std::function<Outcome()> fn) {
    auto* sub = app.add_subcommand(verb, help);
    sub->add_option("p", p, "p")->required();
    sub->add_option("q", q, "q")->required();
    sub->callback([&, fn] {
      echo["p"] = p;
      echo["q"] = q;
      action = fn;
    });
    return sub;
  };
  auto list_parts = [&](const char* verb, const char* help,
                        std::function<Outcome()> fn) {
    auto* sub = app.add_subcommand(verb, help);
    sub->add_option("parts", parts, "part sizes")->required()->expected(1, -1);
    sub->callback([&, fn] {
      echo["parts"] = parts;
      action = fn;
    });
    return sub;
  };

  single_n("phi", "Euler phi(n)", [&] { return do_phi(n); });
  single_n("cyclo-poly", "Cyclotomic polynomial Phi_n",
           [&] { return do_cyclo_poly(n); });
  single_n("mu-matrix", "Representation of the cyclotomic matroid",
           [&] { return do_mu_matrix(n); });
  single_n("bases", "Count (or --list) bases of the cyclotomic matroid",
           [&] { return do_bases(n, g); });
  single_n("verify-duality", "Check the basis-complement duality for mu_n",
           [&] { return from_report(verify_theorem1(n, g.options())); });
  single_n("corollary2", "Basis count of mu_n against the product bound",
           [&] { return do_corollary2(n, g); });

  bool indep_verify = false;
  auto* indep = single_n("indep-gf", "Independence census of mu_n from the EGF",
                         [&] { return do_indep_gf(n, indep_verify, g); });
  indep->add_flag("--verify", indep_verify,
                  "Compare against a brute-force census of mu_n");

  std::optional<std::uint64_t> tutte_mu;
  std::vector<std::size_t> tutte_kpq;
  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  auto* mu_opt = tutte_cmd->add_option("--mu", tutte_mu, "cyclotomic matroid mu_n");
  auto* kpq_opt =
      tutte_cmd->add_option("--kpq", tutte_kpq, "graphic matroid of K_{p,q}")
          ->expected(2);
  mu_opt->excludes(kpq_opt);
  tutte_cmd->require_option(1);
  tutte_cmd->callback([&] {
    if (tutte_mu) {
      echo["mu"] = *tutte_mu;
      action = [&] {
        require_within(*tutte_mu, g.options().limits.tutte_ground, "tutte");
        return do_tutte(cyclotomic_matroid(*tutte_mu),
                        "mu_" + std::to_string(*tutte_mu), g);
      };
    } else {
      echo["kpq"] = tutte_kpq;
      action = [&] {
        const auto a = tutte_kpq[0], b = tutte_kpq[1];
        require_within(a * b, g.options().limits.tutte_ground, "tutte");
        return do_tutte(kpq_matroid(a, b),
                        "K_" + std::to_string(a) + "," + std::to_string(b), g);
      };
    }
  });

  list_parts("bolker", "Product bound for a join of simplices",
             [&] { return do_bolker(parts); });
  list_parts("adin", "Torsion-weighted basis count of a join complex",
             [&] { return do_adin(parts, g); });
  list_parts("star-tree", "Star tree of a join of distinct primes",
             [&] { return do_star_tree(parts); });

  pair_pq("coboundary", "Coboundary polynomial of K_{p,q}",
          [&] { return do_coboundary(p, q, g); });
  pair_pq("chromatic", "Chromatic polynomial of K_{p,q}",
          [&] { return do_chromatic(p, q, g); });
  pair_pq("verify-prop6", "Forest enumerator decomposition and divisibility",
          [&] { return from_report(verify_prop6(p, q, g.options())); });

  std::optional<std::size_t> restricted;
  auto* forest = pair_pq("forest-enum", "Forest enumerator of K_{p,q}", [&] {
    return do_forest_enum(p, q, restricted, g);
  });
  forest->add_option("--restricted", restricted,
                     "Forests of K_{p,j} with every w-degree >= 2");

  unsigned qmax = 0;
  auto* prop4 = pair_pq("verify-prop4",
                        "EGF identity for coboundary polynomials up to orders",
                        [&] { return from_report(verify_prop4(p, q, qmax, g.options())); });
  prop4->add_option("--qmax", qmax, "Largest number of colours")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  if (verb == "forest-enum" && restricted) echo["restricted"] = *restricted;
  if (verb == "verify-prop4") echo["qmax"] = qmax;
  if (verb == "indep-gf") echo["verify"] = indep_verify;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  const int code = emit(verb, echo, outcome, g.json, out);
  err << "elapsed_s: " << elapsed.count() << "\n";
  return code;
}

int write_report(const std::string& verb, const VerificationReport& report,
                 bool json, std::ostream& out) {
  return emit(verb, Json::object(), from_report(report), json, out);
}

}  // namespace cyclomat::cli
