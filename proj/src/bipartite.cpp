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

#include "cyclomat/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclomat/cyclotomic.hpp"

namespace cyclomat {

RepresentedMatroid kpq_matroid(std::size_t p, std::size_t q) {
  RationalMatrix incidence(p + q, p * q);
  std::vector<std::string> labels;
  labels.reserve(p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t e = i * q + j;
      incidence(i, e) = 1;
      incidence(p + j, e) = -1;
      labels.push_back("v" + std::to_string(i + 1) + "w" + std::to_string(j + 1));
    }
  return RepresentedMatroid(std::move(labels), std::move(incidence));
}

LaurentPolynomial to_laurent(const MultivariatePolynomial& p) {
  if (p.variable_count() != 1)
    throw std::invalid_argument("to_laurent: expected one variable");
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(static_cast<int>(e[0]), c);
  return out;
}

MultivariatePolynomial coboundary_polynomial(std::size_t p, std::size_t q,
                                             const SweepOptions& options) {
  if (p + q == 0)
    throw std::invalid_argument("coboundary_polynomial: empty graph");
  const auto colors = MultivariatePolynomial::variable(2, kColorsVar);
  const auto t = MultivariatePolynomial::variable(2, kTVar);
  const MultivariatePolynomial one(2, 1);
  if (p == 0 || q == 0) return colors.pow(static_cast<unsigned>(p + q - 1));

  const RepresentedMatroid m = kpq_matroid(p, q);
  const TuttePolynomial tp = tutte(m, options);
  const unsigned full_rank = static_cast<unsigned>(m.rank());
  const MultivariatePolynomial x_numerator = colors + t - one;
  const MultivariatePolynomial t_minus_one = t - one;
  MultivariatePolynomial out(2);
  for (const auto& [key, c] : tp.terms()) {
    const auto [i, j] = key;
    if (i > full_rank)
      throw std::logic_error("coboundary_polynomial: x-degree exceeds rank");
    out += x_numerator.pow(i) * t_minus_one.pow(full_rank - i) * t.pow(j) *
           Rational(c);
  }
  if (!out.has_integer_coefficients())
    throw std::logic_error("coboundary_polynomial: non-integer coefficient");
  return out;
}

LaurentPolynomial coloring_weight_sum(std::size_t p, std::size_t q,
                                      std::uint64_t colors) {
  const std::size_t vertices = p + q;
  LaurentPolynomial sum;
  if (colors == 0) return vertices == 0 ? LaurentPolynomial(1) : sum;
  std::vector<std::uint64_t> f(vertices, 0);
  std::vector<std::uint64_t> histogram(p * q + 1, 0);
  for (;;) {
    std::size_t mono = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (f[i] == f[p + j]) ++mono;
    ++histogram[mono];
    std::size_t pos = 0;
    while (pos < vertices && ++f[pos] == colors) f[pos++] = 0;
    if (pos == vertices) break;
  }
  for (std::size_t k = 0; k < histogram.size(); ++k)
    if (histogram[k] != 0)
      sum.add_term(static_cast<int>(k),
                   Rational(BigInt(static_cast<unsigned long>(histogram[k]))));
  return sum;
}

VerificationReport verify_coboundary_by_colorings(std::size_t p, std::size_t q,
                                                  const SweepOptions& options) {
  VerificationReport report;
  report.claim = "coboundary_colorings";
  const MultivariatePolynomial chi = coboundary_polynomial(p, q, options);
  report.add_stat("coboundary", chi.to_string({"q", "t"}));
  const std::uint64_t top = p + q + 1;
  for (std::uint64_t colors = 1; colors <= top; ++colors) {
    LaurentPolynomial lhs = to_laurent(chi.specialize(kColorsVar, Rational(
        BigInt(static_cast<unsigned long>(colors)))));
    lhs *= Rational(BigInt(static_cast<unsigned long>(colors)));
    if (lhs != coloring_weight_sum(p, q, colors))
      report.fail({colors}, "coloring sum differs at this number of colors");
  }
  report.add_stat("colors_checked", "1.." + std::to_string(top));
  return report;
}

MultivariatePolynomial chromatic_polynomial(std::size_t p, std::size_t q,
                                            const SweepOptions& options) {
  const MultivariatePolynomial chi = coboundary_polynomial(p, q, options);
  return chi.specialize(kTVar, 0) * MultivariatePolynomial::variable(1, 0);
}

BigInt proper_colorings(std::size_t p, std::size_t q, std::uint64_t colors) {
  const std::size_t vertices = p + q;
  if (colors == 0) return vertices == 0 ? 1 : 0;
  std::vector<std::uint64_t> f(vertices, 0);
  BigInt count = 0;
  for (;;) {
    bool proper = true;
    for (std::size_t i = 0; i < p && proper; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (f[i] == f[p + j]) {
          proper = false;
          break;
        }
    if (proper) ++count;
    std::size_t pos = 0;
    while (pos < vertices && ++f[pos] == colors) f[pos++] = 0;
    if (pos == vertices) break;
  }
  return count;
}

Rational chromatic_from_egf(std::size_t p, std::size_t q, unsigned colors) {
  TruncatedBivariateSeries<Rational> g(p, q);
  for (std::size_t a = 0; a <= p; ++a) g.at(a, 0) = 1;
  for (std::size_t b = 0; b <= q; ++b) g.at(0, b) = 1;
  return series_int_pow(g, colors).at(p, q);
}

VerificationReport verify_prop4(std::size_t order1, std::size_t order2,
                                unsigned max_colors,
                                const SweepOptions& options) {
  VerificationReport report;
  report.claim = "prop4";
  std::vector<std::vector<MultivariatePolynomial>> chi(
      order1 + 1, std::vector<MultivariatePolynomial>(order2 + 1));
  for (std::size_t a = 0; a <= order1; ++a)
    for (std::size_t b = 0; b <= order2; ++b)
      if (a + b > 0) chi[a][b] = coboundary_polynomial(a, b, options);

  TruncatedBivariateSeries<LaurentPolynomial> inner(order1, order2);
  for (std::size_t a = 0; a <= order1; ++a)
    for (std::size_t b = 0; b <= order2; ++b)
      inner.at(a, b) = LaurentPolynomial::monomial(static_cast<int>(a * b));

  for (unsigned colors = 0; colors <= max_colors; ++colors) {
    const Rational c(colors);
    const auto rhs = series_int_pow(inner, colors);
    for (std::size_t a = 0; a <= order1; ++a)
      for (std::size_t b = 0; b <= order2; ++b) {
        LaurentPolynomial lhs(1);
        if (a + b > 0) lhs = to_laurent(chi[a][b].specialize(kColorsVar, c)) * c;
        if (lhs != rhs.at(a, b))
          report.fail({colors, a, b},
                      "coefficient (colors, m1, m2) differs between the sides");
      }
  }
  report.add_stat("orders", std::to_string(order1) + "," + std::to_string(order2));
  report.add_stat("colors_checked", "0.." + std::to_string(max_colors));
  // deg_colors chi-bar_{a,b} <= a + b, so max_colors >= order1 + order2 + 1
  // pins the polynomial identity on the truncated range.
  report.add_stat("polynomial_identity_established",
                  max_colors >= order1 + order2 + 1 ? "true" : "false");
  return report;
}

LaurentPolynomial indep_gf_from_egf(std::size_t p1, std::size_t p2) {
  if (p1 == 0 || p2 == 0)
    throw std::invalid_argument("indep_gf_from_egf: p1, p2 >= 1");
  TruncatedBivariateSeries<LaurentPolynomial> inner(p1, p2);
  const LaurentPolynomial y_plus_one =
      LaurentPolynomial::monomial(1) + LaurentPolynomial(1);
  for (std::size_t a = 0; a <= p1; ++a)
    for (std::size_t b = 0; b <= p2; ++b)
      inner.at(a, b) = y_plus_one.pow(static_cast<unsigned>(a * b)) *
                       LaurentPolynomial::monomial(-static_cast<int>(a + b));
  LaurentPolynomial out =
      series_log(inner).at(p1, p2) * LaurentPolynomial::monomial(1);
  if (!out.is_integral_polynomial())
    throw std::logic_error("indep_gf_from_egf: negative powers of y survive");
  return out;
}

VerificationReport corollary5_check(std::uint64_t n, const SweepOptions& options) {
  const Factorization f = factorize(n);
  if (f.prime_count() != 2)
    throw std::invalid_argument("corollary5_check: n must have two prime factors");
  require_within(n, options.limits.basis_ground, "corollary5_check");
  VerificationReport report;
  report.claim = "corollary5";
  const auto p1 = f.factors[0].prime, p2 = f.factors[1].prime;
  const std::uint64_t copies = f.cofactor();
  const LaurentPolynomial census =
      independence_census(cyclotomic_matroid(n), options);
  const LaurentPolynomial egf = indep_gf_from_egf(p1, p2);
  const LaurentPolynomial predicted = egf.pow(static_cast<unsigned>(copies));
  report.add_stat("n", std::to_string(n));
  report.add_stat("egf_coefficient", egf.to_string());
  report.add_stat("power", std::to_string(copies));
  report.add_stat("census", census.to_string());
  report.add_stat("predicted", predicted.to_string());
  if (census != predicted)
    report.fail({n}, "independence census of mu_n differs from the EGF power");
  return report;
}

namespace {

// Depth-first sweep over acyclic edge subsets of K_{p,q}, accumulating the
// V-degree vector of each forest. Union-find without path compression so
// that unions can be undone.
class ForestSweep {
 public:
  ForestSweep(std::size_t p, std::size_t q, bool w_degree_at_least_two)
      : p_(p),
        q_(q),
        restricted_(w_degree_at_least_two),
        parent_(p + q),
        deg_v_(p, 0),
        deg_w_(q, 0) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < p; ++i) cells *= q + 1;
    counts.assign(cells, 0);
    for (std::size_t v = 0; v < parent_.size(); ++v) parent_[v] = v;
  }

  void run(std::uint64_t task, std::size_t depth) {
    for (std::size_t e = 0; e < depth; ++e)
      if ((task >> e) & 1U)
        if (!link(e)) return;
    visit(depth);
  }

  std::vector<std::uint64_t> counts;

 private:
  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Adds edge e if it keeps the subgraph acyclic; records the union.
  bool link(std::size_t e) {
    const std::size_t i = e / q_, j = e % q_;
    const std::size_t a = find(i), b = find(p_ + j);
    if (a == b) return false;
    parent_[a] = b;
    undo_.push_back(a);
    ++deg_v_[i];
    ++deg_w_[j];
    return true;
  }

  void unlink(std::size_t e) {
    const std::size_t a = undo_.back();
    undo_.pop_back();
    parent_[a] = a;
    --deg_v_[e / q_];
    --deg_w_[e % q_];
  }

  void visit(std::size_t e) {
    if (e == p_ * q_) {
      if (restricted_ &&
          std::any_of(deg_w_.begin(), deg_w_.end(), [](auto d) { return d < 2; }))
        return;
      std::size_t cell = 0;
      for (std::size_t i = p_; i-- > 0;) cell = cell * (q_ + 1) + deg_v_[i];
      ++counts[cell];
      return;
    }
    visit(e + 1);
    if (link(e)) {
      visit(e + 1);
      unlink(e);
    }
  }

  std::size_t p_, q_;
  bool restricted_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> undo_;
  std::vector<std::size_t> deg_v_, deg_w_;
};

MultivariatePolynomial sweep_forests(std::size_t p, std::size_t q,
                                     bool restricted,
                                     const SweepOptions& options) {
  require_within(p * q, options.limits.forest_edges, "forest_enumerator");
  const std::size_t depth = std::min<std::size_t>(p * q, 6);
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<std::uint64_t>> partial(tasks);
  parallel_for(tasks, options.threads, [&](std::size_t t) {
    ForestSweep sweep(p, q, restricted);
    sweep.run(t, depth);
    partial[t] = std::move(sweep.counts);
  });
  MultivariatePolynomial out(p);
  const std::size_t cells = partial.front().size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::uint64_t total = 0;
    for (const auto& part : partial) total += part[cell];
    if (total == 0) continue;
    MultivariatePolynomial::Exponents e(p);
    std::size_t rest = cell;
    for (std::size_t i = 0; i < p; ++i) {
      e[i] = static_cast<unsigned>(rest % (q + 1));
      rest /= q + 1;
    }
    out.add_term(e, Rational(BigInt(static_cast<unsigned long>(total))));
  }
  return out;
}

MultivariatePolynomial one_plus_sum(std::size_t p) {
  MultivariatePolynomial s(p, 1);
  for (std::size_t i = 0; i < p; ++i) s += MultivariatePolynomial::variable(p, i);
  return s;
}

}  // namespace

MultivariatePolynomial forest_enumerator(std::size_t p, std::size_t q,
                                         const SweepOptions& options) {
  if (p == 0) throw std::invalid_argument("forest_enumerator: p >= 1");
  return sweep_forests(p, q, false, options);
}

MultivariatePolynomial restricted_forest_enumerator(std::size_t p, std::size_t j,
                                                    const SweepOptions& options) {
  if (p == 0) throw std::invalid_argument("restricted_forest_enumerator: p >= 1");
  if (j + 1 > p)
    throw std::invalid_argument("restricted_forest_enumerator: j <= p - 1");
  return sweep_forests(p, j, true, options);
}

VerificationReport verify_prop6(std::size_t p, std::size_t q,
                                const SweepOptions& options) {
  if (p == 0 || q < p) throw std::invalid_argument("verify_prop6: q >= p >= 1");
  VerificationReport report;
  report.claim = "prop6";
  const MultivariatePolynomial a = forest_enumerator(p, q, options);
  const MultivariatePolynomial s = one_plus_sum(p);

  MultivariatePolynomial weighted(p), unweighted(p);
  for (std::size_t j = 0; j < p; ++j) {
    const MultivariatePolynomial term =
        s.pow(static_cast<unsigned>(q - j)) *
        restricted_forest_enumerator(p, j, options);
    weighted += term * Rational(binomial(q, j));
    unweighted += term;
  }
  report.add_stat("forest_enumerator", a.to_string());
  const bool decomposition = a == weighted;
  report.add_stat("decomposition", decomposition ? "holds" : "fails");
  report.add_stat("unweighted_decomposition", a == unweighted ? "holds" : "fails");
  if (!decomposition)
    report.fail_check("A_{p,q} != sum_j C(q,j) (1+sum x)^{q-j} Atilde_{p,j}");

  const unsigned exponent = static_cast<unsigned>(q - p + 1);
  const auto quotient = poly_divide_exact(a, s.pow(exponent));
  report.add_stat("divisor_exponent", std::to_string(exponent));
  if (!quotient) {
    report.add_stat("divisible", "false");
    report.fail_check("A_{p,q} not divisible by (1+sum x)^{q-p+1}");
    return report;
  }
  report.add_stat("divisible", "true");
  report.add_stat("quotient", quotient->to_string());
  report.add_stat("quotient_degree", std::to_string(quotient->total_degree()));
  if (quotient->total_degree() != 2 * (p - 1))
    report.fail_check("quotient total degree differs from 2(p-1)");
  if (!quotient->is_symmetric()) report.fail_check("quotient is not symmetric");
  return report;
}

VerificationReport verify_forest_specialization(std::size_t p, std::size_t q,
                                                const SweepOptions& options) {
  if (p == 0 || q == 0)
    throw std::invalid_argument("verify_forest_specialization: p, q >= 1");
  VerificationReport report;
  report.claim = "forest_specialization";
  const RepresentedMatroid m = kpq_matroid(p, q);
  const TuttePolynomial t = tutte(m, options);
  const MultivariatePolynomial a = forest_enumerator(p, q, options);

  // T(x+1, 1) as a polynomial in x.
  const LaurentPolynomial x_plus_one =
      LaurentPolynomial::monomial(1) + LaurentPolynomial(1);
  LaurentPolynomial lhs;
  for (const auto& [key, c] : t.terms())
    lhs += x_plus_one.pow(key.first) * Rational(c);
  // A(x, ..., x) = sum over forests of x^{|F|}; T(x+1, 1) weights a forest
  // by x^{rank - |F|}, and rank = p + q - 1.
  const int rank = static_cast<int>(m.rank());
  LaurentPolynomial rhs, literal;
  for (const auto& [e, c] : a.terms()) {
    int degree = 0;
    for (auto d : e) degree += static_cast<int>(d);
    rhs.add_term(rank - degree, c);
    literal.add_term(static_cast<int>(p * q) - degree, c);
  }
  report.add_stat("independent_set_polynomial", lhs.to_string("x"));
  report.add_stat("exponent", std::to_string(rank));
  if (lhs != rhs) report.fail_check("T(x+1,1) != x^{p+q-1} A(1/x,...,1/x)");
  report.add_stat("pq_exponent_form", lhs == literal ? "holds" : "fails");

  const BigInt trees = t.evaluate(1, 1).get_num();
  BigInt expected, factor;
  mpz_ui_pow_ui(expected.get_mpz_t(), p, q - 1);
  mpz_ui_pow_ui(factor.get_mpz_t(), q, p - 1);
  expected *= factor;
  report.add_stat("spanning_trees", trees.get_str());
  report.add_stat("expected_spanning_trees", expected.get_str());
  if (trees != expected) report.fail_check("spanning tree count differs");
  return report;
}

}  // namespace cyclomat
