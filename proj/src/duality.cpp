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

#include "cyclomat/duality.hpp"

#include <stdexcept>

namespace cyclomat {

std::vector<std::size_t> DualityDictionary::prime_parts() const {
  std::vector<std::size_t> parts;
  for (auto p : factorization.primes()) parts.push_back(p);
  return parts;
}

GroundSubset DualityDictionary::image(const GroundSubset& subset) const {
  if (subset.width() != n)
    throw std::invalid_argument("DualityDictionary::image: width mismatch");
  std::uint64_t mask = 0;
  for (auto j : subset.elements())
    mask |= std::uint64_t{1} << entries[j].dual_position;
  return {n, mask};
}

DualityDictionary duality_dictionary(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("duality_dictionary: n >= 2");
  if (n > GroundSubset::kMaxWidth)
    throw LimitExceeded("duality_dictionary: n exceeds 64 ground positions");
  DualityDictionary d;
  d.n = n;
  d.factorization = factorize(n);
  d.s = d.factorization.radical();
  d.t = d.factorization.cofactor();
  const JoinComplex complex = d.complex();
  const auto primes = d.factorization.primes();
  d.entries.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    DictionaryEntry e;
    e.copy = j % d.t;
    e.k = j / d.t;
    for (auto p : primes) e.facet.push_back(static_cast<std::size_t>(e.k % p));
    e.dual_position = e.copy * complex.facet_count() + complex.facet_index(e.facet);
    d.entries.push_back(std::move(e));
  }
  return d;
}

RepresentedMatroid simplicial_dual_side(std::uint64_t n) {
  const DualityDictionary d = duality_dictionary(n);
  const RepresentedMatroid block = simplicial_matroid(d.complex());
  std::vector<RepresentedMatroid> copies(d.t, block);
  return direct_sum(copies);
}

namespace {

struct SweepOutcome {
  std::uint64_t subsets = 0;
  std::uint64_t bases = 0;
  std::optional<std::vector<std::uint64_t>> witness;
};

// All size-k subsets with smallest element `first`, in lexicographic order.
SweepOutcome sweep_from(std::uint64_t first, std::size_t k,
                        const RepresentedMatroid& mu,
                        const RepresentedMatroid& dual_side,
                        const DualityDictionary& dict) {
  SweepOutcome out;
  const std::size_t n = mu.ground_size();
  std::vector<std::size_t> combo{static_cast<std::size_t>(first)};
  auto check = [&]() {
    const GroundSubset b = GroundSubset::of(n, combo);
    const bool left = mu.is_basis(b);
    const bool right = dual_side.is_basis(dict.image(b.complement()));
    ++out.subsets;
    if (left) ++out.bases;
    if (left != right && !out.witness)
      out.witness = std::vector<std::uint64_t>(combo.begin(), combo.end());
  };
  // Extend combo to size k with increasing elements.
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (combo.size() == k) {
      check();
      return;
    }
    const std::size_t needed = k - combo.size();
    for (std::size_t e = next; e + needed <= n; ++e) {
      combo.push_back(e);
      self(self, e + 1);
      combo.pop_back();
    }
  };
  if (k == 0) return out;
  recurse(recurse, static_cast<std::size_t>(first) + 1);
  return out;
}

}  // namespace

VerificationReport verify_theorem1(std::uint64_t n, const SweepOptions& options) {
  VerificationReport report;
  report.claim = "theorem1";
  const DualityDictionary dict = duality_dictionary(n);
  const RepresentedMatroid mu = cyclotomic_matroid(n);
  const RepresentedMatroid dual_side = simplicial_dual_side(n);

  report.add_stat("n", std::to_string(n));
  report.add_stat("s", std::to_string(dict.s));
  report.add_stat("t", std::to_string(dict.t));
  report.add_stat("mu_rank", std::to_string(mu.rank()));
  report.add_stat("dual_side_rank", std::to_string(dual_side.rank()));
  if (mu.rank() + dual_side.rank() != n)
    report.fail_check("ranks of mu_n and the dual side do not sum to n");

  const bool exhaustive = n <= options.limits.exhaustive_duality_n;
  const bool with_tutte = n <= options.limits.tutte_ground;
  report.add_stat("mode", exhaustive   ? "exhaustive"
                          : with_tutte ? "count-and-tutte"
                                       : "count-only");

  if (exhaustive) {
    const std::size_t k = mu.rank();
    std::vector<SweepOutcome> partial(n);
    parallel_for(n, options.threads, [&](std::size_t first) {
      partial[first] = sweep_from(first, k, mu, dual_side, dict);
    });
    std::uint64_t subsets = k == 0 ? 1 : 0, bases = k == 0 ? 1 : 0;
    for (const auto& p : partial) {
      subsets += p.subsets;
      bases += p.bases;
      if (p.witness)
        report.fail(*p.witness,
                    "basis status of B in mu_n differs from that of the image "
                    "of its complement");
    }
    report.add_stat("subsets_checked", std::to_string(subsets));
    report.add_stat("bases_found", std::to_string(bases));
  }

  const auto mu_bases = enumerate_bases(mu, false, options).count;
  const auto dual_bases = enumerate_bases(dual_side, false, options).count;
  report.add_stat("mu_basis_count", std::to_string(mu_bases));
  report.add_stat("dual_side_basis_count", std::to_string(dual_bases));
  if (mu_bases != dual_bases) report.fail_check("basis counts differ");

  if (with_tutte) {
    const TuttePolynomial t_mu = tutte(mu, options);
    const TuttePolynomial t_dual = tutte(dual_side, options);
    report.add_stat("tutte_mu", t_mu.to_string());
    const bool swap_holds = t_mu == t_dual.swapped();
    report.add_stat("tutte_swap", swap_holds ? "holds" : "fails");
    if (!swap_holds) report.fail_check("T_mu(x,y) != T_dual(y,x)");
  }
  return report;
}

std::uint64_t qbasis_count(std::uint64_t n, const SweepOptions& options) {
  require_within(n, options.limits.basis_ground, "qbasis_count");
  return enumerate_bases(cyclotomic_matroid(n), false, options).count;
}

Corollary2Bound corollary2_bound(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::size_t> primes;
  std::size_t odd = 0;
  for (auto p : f.primes()) {
    primes.push_back(p);
    if (p % 2 == 1) ++odd;
  }
  Corollary2Bound out;
  mpz_pow_ui(out.bound.get_mpz_t(), bolker_bound(primes).get_mpz_t(),
             f.cofactor());
  out.equality_predicted = odd <= 2;
  return out;
}

}  // namespace cyclomat
