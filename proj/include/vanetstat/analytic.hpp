// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include "vanetstat/pmf.hpp"
#include "vanetstat/rational.hpp"

namespace vanetstat {

//---------------------------------------------------------------------------//
// Closed-form connectivity statistics for a chain of n vehicles whose n-1
// consecutive links are independent Bernoulli(p).
//
// Every function is available for T = Rational (exact) and T = double. The
// exact path is the reference; the double path is the fast path for large n.
// Arguments: 2 <= n <= kMaxVehicles, 0 <= p <= 1, otherwise
// std::invalid_argument.
//---------------------------------------------------------------------------//

inline constexpr int kMaxVehicles = 1 << 20;
//! Largest n for which callers should prefer the exact path by default.
inline constexpr int kExactVehicleLimit = 64;

//! Binomial in the number of failed links: C(n-1, r-1) p^{n-r} (1-p)^{r-1}.
template <class T>
BasicPmf<T> clust_num_pmf(int n, T const& p);

template <class T>
BasicMoments<T> clust_num_moments(int n, T const& p);

//! Expected number of clusters with at least two vehicles.
template <class T>
T connected_clust_num_mean(int n, T const& p);

//! Size of a cluster chosen uniformly among the clusters of the chain.
template <class T>
BasicPmf<T> clust_size_pmf(int n, T const& p);

//! At p = 1 the limits (n, 0) are returned.
template <class T>
BasicMoments<T> clust_size_moments(int n, T const& p);

/*!
 * Cluster-size PMF assembled from composition counts: for each cluster count
 * k, sum over compositions of n into k parts the fraction of parts equal to
 * r, weighted by (1-p)^{k-1} p^{n-k}. Independent of clust_size_pmf.
 */
ExactPmf clust_size_pmf_via_compositions(int n, Rational const& p);

/*!
 * Alternating-sum closed form g(k) = P(longest run of successful links <= k-1)
 * over the n-1 links, for 1 <= k <= n-1 (std::out_of_range otherwise).
 * Exact for Rational; the double instantiation cancels badly for large n.
 */
template <class T>
T longest_run_cdf_g(int n, T const& p, int k);

/*!
 * Same quantity from the recursion u_j = u_{j-1} - (1-p) p^k u_{j-k-1},
 * which stays in [0, 1] and is stable in floating point.
 */
double longest_run_cdf_g_recursive(int n, double p, int k);

//! Biggest cluster = longest link run + 1; exact g(k) differences.
ExactPmf biggest_clust_pmf(int n, Rational const& p);
//! Floating-point path through the stable recursion.
Pmf biggest_clust_pmf(int n, double p);

ExactMoments biggest_clust_moments_exact(int n, Rational const& p);
Moments biggest_clust_moments_exact(int n, double p);

/*!
 * Large-n approximation of the biggest-cluster mean and variance:
 * mean = log_{1/p}((n-1)(1-p)) + gamma/ln(1/p) + 1/2,
 * variance = pi^2/ln^2(1/p) + 1/12. Needs 0 < p < 1 and n >= 3.
 */
Moments biggest_clust_moments_asymptotic(int n, double p);

/*!
 * Number of idle vehicles (no working link to either neighbour).
 *
 * P(r) is p^{n+1}/(1-p)^2 times the x^{n-r} Maclaurin coefficient of
 * (1-x)^{r+1} / ((1-x) p/(1-p) - x^2)^{r+1}. The exact path expands that
 * rational function literally. The double path runs a forward recursion over
 * the links (state: last link up or down, idle count so far), which costs
 * O(n * width) and never subtracts. Support is
 * {0..n}; r = n-1 is impossible and has probability zero.
 */
template <class T>
BasicPmf<T> idle_cars_pmf(int n, T const& p);

//! For n = 2 the variance is 4p(1-p); the general polynomial needs n >= 3.
template <class T>
BasicMoments<T> idle_cars_moments(int n, T const& p);

}  // namespace vanetstat
