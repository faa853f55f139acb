#pragma once

#include <vector>

#include "pmaps/bigint.hpp"

namespace pmaps {

// Truncated power series; coefficient k at index k.
using Series = std::vector<BigInt>;
// Bivariate series indexed [black exponent][white exponent].
using Series2 = std::vector<std::vector<BigInt>>;

BigInt count_rooted_trees(long n);
BigInt count_black_rooted(long i, long j);
BigInt count_white_rooted(long i, long j);
BigInt count_edge_marked(long i, long j);

BigInt count_rooted_dissections(long n);
BigInt count_rooted_dissections_ij(long i, long j);
BigInt super_catalan(long n, long m);

// Rooted binary trees by nodes, from r = x(1+r)^2.
Series series_binary_trees(int N);

struct TreeSeries {
  Series r;
  Series2 r1, r2;
};
TreeSeries series_trees(int N);
Series series_dissections(int N);
Series2 series_dissections_ij(int N);

// Coefficient n is the number of rooted 3-connected maps with n+2 edges.
Series series_3connected(int N);
// Entry [i][j] is the number of rooted 3-connected maps with i+2 vertices and j+2 faces.
Series2 series_3connected_ij(int N);
// Rooted undecomposable dissections by inner vertices.
Series series_undecomposable(int N);

BigInt count_rooted_3connected(long edges);
BigInt count_rooted_3connected_ij(long vertices, long faces);

BigInt count_rooted_triangulations(long n);
BigInt count_unrooted_triangulations(long n);

// Arithmetic helpers, exact to order N.
Series series_mul(const Series& a, const Series& b, int N);
Series series_inv(const Series& a, int N);
Series2 series2_mul(const Series2& a, const Series2& b, int N);
Series2 series2_inv(const Series2& a, int N);

}  // namespace pmaps
