#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "easyq/enumerate.hpp"
#include "easyq/partition.hpp"

namespace easyq {

using BigRat = boost::multiprecision::cpp_rational;

/// Exact moment sequence m_1..m_K; values[i] = m_{i+1}.
struct MomentSeries {
  std::vector<BigRat> values;

  int order() const { return static_cast<int>(values.size()); }
  const BigRat& moment(int k) const { return values[static_cast<size_t>(k - 1)]; }
};

/// Exact free cumulant sequence kappa_1..kappa_K.
struct CumulantSeries {
  std::vector<BigRat> values;

  int order() const { return static_cast<int>(values.size()); }
  const BigRat& cumulant(int k) const { return values[static_cast<size_t>(k - 1)]; }
};

/// m_k = sum over noncrossing partitions of k points of the product of
/// kappa_{|block|}; evaluated by the first-block recursion.
MomentSeries moments_from_cumulants(const CumulantSeries& kappa, int order);

/// Triangular inverse of moments_from_cumulants.
CumulantSeries cumulants_from_moments(const MomentSeries& m, int order);

/// Free additive convolution: cumulants add.
MomentSeries free_convolve(const MomentSeries& a, const MomentSeries& b, int order);

/// Law of s X: m_k -> s^k m_k.
MomentSeries dilate(const MomentSeries& m, const BigRat& s);

/// Free Poisson with rate t: kappa_k == t for every k.
MomentSeries free_poisson(const BigRat& t, int order);

/// sum over cat(0,k) of the product of weight(|block|) over blocks.
BigInt character_count(const CategoryId& cat, int k, const std::function<BigInt(int)>& weight);

enum class FiniteGroup { S, H };

/// Exact average of (trace of the defining matrix)^k over all of S_q or
/// over all signed permutations H_q; exhaustive enumeration.
BigInt finite_group_moment(FiniteGroup g, int q, int k);

/// Number of noncrossing partitions of 2k upper and 2l lower points in
/// which each (2i-1, 2i) pair shares a block; verified against |NC(k,l)|
/// via the collapsing bijection.
BigInt ncjoin_count(int k, int l);

}  // namespace easyq
