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

#ifndef CYCLOMAT_BIPARTITE_HPP
#define CYCLOMAT_BIPARTITE_HPP

#include <cstddef>
#include <cstdint>

#include "cyclomat/matroid.hpp"
#include "cyclomat/polyseries.hpp"
#include "cyclomat/report.hpp"
#include "cyclomat/sweep.hpp"

namespace cyclomat {

// Graphic matroid of K_{p,q}: rows v_1..v_p, w_1..w_q; edge (v_i, w_j) is
// column i*q + j with +1 at v_i and -1 at w_j.
RepresentedMatroid kpq_matroid(std::size_t p, std::size_t q);

// Variable order of coboundary polynomials: (colors, t).
inline constexpr std::size_t kColorsVar = 0;
inline constexpr std::size_t kTVar = 1;

// chi-bar(colors, t) = colors^{-1} sum over colorings of t^{#monochromatic
// edges}, obtained from the Tutte polynomial by the Crapo substitution.
// For p, q >= 1 this is (t-1)^{p+q-1} T((colors+t-1)/(t-1), t). Edgeless
// K_{0,m} gives colors^{m-1}.
MultivariatePolynomial coboundary_polynomial(std::size_t p, std::size_t q,
                                             const SweepOptions& options = {});

// Brute force: sum over all colorings of the p+q vertices with `colors`
// colors of t^{#monochromatic edges}.
LaurentPolynomial coloring_weight_sum(std::size_t p, std::size_t q,
                                      std::uint64_t colors);

// colors * chi-bar(colors, t) against coloring_weight_sum for colors in
// 1..p+q+1.
VerificationReport verify_coboundary_by_colorings(
    std::size_t p, std::size_t q, const SweepOptions& options = {});

// colors * chi-bar(colors, 0), one variable.
MultivariatePolynomial chromatic_polynomial(std::size_t p, std::size_t q,
                                            const SweepOptions& options = {});

// Brute-force proper colourings of K_{p,q}.
BigInt proper_colorings(std::size_t p, std::size_t q, std::uint64_t colors);

// Coefficient of x1^p x2^q / (p! q!) in (e^{x1} + e^{x2} - 1)^colors.
Rational chromatic_from_egf(std::size_t p, std::size_t q, unsigned colors);

// 1 + colors * sum chi-bar_{a,b} x1^a x2^b / (a! b!) against
// (sum t^{ab} x1^a x2^b / (a! b!))^colors for colors = 0..max_colors,
// truncated at orders (order1, order2).
VerificationReport verify_prop4(std::size_t order1, std::size_t order2,
                                unsigned max_colors,
                                const SweepOptions& options = {});

// y times the coefficient of z1^{p1} z2^{p2} / (p1! p2!) in
// log(sum (y+1)^{m1 m2} y^{-m1-m2} z1^{m1} z2^{m2} / (m1! m2!)). Equals
// T_{K_{p1,p2}}(1, y+1). Throws std::logic_error if negative powers of y
// survive.
LaurentPolynomial indep_gf_from_egf(std::size_t p1, std::size_t p2);

// Independence census of mu_n against indep_gf_from_egf(p1, p2)^t for
// n = p1^{m1} p2^{m2}, t = p1^{m1-1} p2^{m2-1}.
VerificationReport corollary5_check(std::uint64_t n,
                                    const SweepOptions& options = {});

// sum over forests F of K_{p,q} of prod x_i^{deg_F(v_i)}.
MultivariatePolynomial forest_enumerator(std::size_t p, std::size_t q,
                                         const SweepOptions& options = {});

// Same sum over forests of K_{p,j} in which every w has degree >= 2.
// Requires j <= p - 1 (larger j admit no such forest).
MultivariatePolynomial restricted_forest_enumerator(
    std::size_t p, std::size_t j, const SweepOptions& options = {});

// A_{p,q} = sum_{j<p} C(q,j) (1+x_1+...+x_p)^{q-j} Atilde_{p,j}, divisibility
// by (1+x_1+...+x_p)^{q-p+1}, and the quotient's degree and symmetry.
VerificationReport verify_prop6(std::size_t p, std::size_t q,
                                const SweepOptions& options = {});

// T_{K_{p,q}}(x+1, 1) = x^{p+q-1} A_{p,q}(1/x, ..., 1/x), and the spanning
// tree count p^{q-1} q^{p-1}. The same identity with x^{pq} in place of
// x^{p+q-1} is reported as the stat "pq_exponent_form"; it holds only when
// min(p, q) = 1.
VerificationReport verify_forest_specialization(
    std::size_t p, std::size_t q, const SweepOptions& options = {});

// Single-variable polynomial to a Laurent polynomial.
LaurentPolynomial to_laurent(const MultivariatePolynomial& p);

}  // namespace cyclomat

#endif  // CYCLOMAT_BIPARTITE_HPP
