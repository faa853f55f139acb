#include "pmaps/count.hpp"

#include <algorithm>

#include "pmaps/error.hpp"

namespace pmaps {

namespace mp = boost::multiprecision;

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative factorial");
  BigInt r = 1;
  for (long t = 2; t <= n; ++t) r *= t;
  return r;
}

unsigned ceil_log2(const BigInt& count) {
  if (count <= 1) return 0;
  return static_cast<unsigned>(mp::msb(BigInt(count - 1))) + 1;
}

namespace {

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) return 0;
  return a / b;
}

BigInt as_integer(const BigRat& q, const char* what) {
  if (mp::denominator(q) != 1) throw Error(Errc::InvalidArgument, std::string(what) + " is not an integer");
  return mp::numerator(q);
}

Series2 grid(int N) { return Series2(N + 1, std::vector<BigInt>(N + 1)); }

}  // namespace

BigInt count_rooted_trees(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

BigInt count_black_rooted(long i, long j) {
  if (i < 0 || j < 0 || i + j < 1) return 0;
  return exact_div(binomial(2 * j + 1, i) * binomial(2 * i, j), 2 * j + 1);
}

BigInt count_white_rooted(long i, long j) {
  // the ratio form degenerates when no black-rooted tree exists; swap colors instead
  return count_black_rooted(j, i);
}

BigInt count_edge_marked(long i, long j) {
  if (2 * i - j + 1 > 0) return exact_div((i + j - 1) * count_black_rooted(i, j), 2 * i - j + 1);
  if (2 * j - i + 1 > 0) return exact_div((i + j - 1) * count_white_rooted(i, j), 2 * j - i + 1);
  return 0;
}

BigInt count_rooted_dissections(long n) {
  if (n < 1) return 0;
  return exact_div(6 * binomial(2 * n, n), BigInt((n + 2) * (n + 1)));
}

BigInt count_rooted_dissections_ij(long i, long j) {
  if (i < 0 || j < 0 || i + j < 1) return 0;
  return exact_div(3 * binomial(2 * j + 1, i) * binomial(2 * i + 1, j), BigInt((2 * i + 1) * (2 * j + 1)));
}

BigInt super_catalan(long n, long m) {
  return factorial(2 * n) * factorial(2 * m) / (factorial(n) * factorial(m) * factorial(n + m));
}

Series series_mul(const Series& a, const Series& b, int N) {
  Series c(N + 1);
  for (int p = 0; p < static_cast<int>(a.size()) && p <= N; ++p) {
    if (a[p] == 0) continue;
    for (int q = 0; q < static_cast<int>(b.size()) && p + q <= N; ++q) c[p + q] += a[p] * b[q];
  }
  return c;
}

Series series_inv(const Series& a, int N) {
  if (a.empty() || (a[0] != 1 && a[0] != -1)) throw Error(Errc::InvalidArgument, "series inverse needs a unit constant term");
  Series b(N + 1);
  b[0] = a[0];
  for (int k = 1; k <= N; ++k) {
    BigInt s = 0;
    for (int p = 1; p <= k && p < static_cast<int>(a.size()); ++p) s += a[p] * b[k - p];
    b[k] = -s * a[0];
  }
  return b;
}

Series2 series2_mul(const Series2& a, const Series2& b, int N) {
  Series2 c = grid(N);
  for (int i1 = 0; i1 <= N && i1 < static_cast<int>(a.size()); ++i1)
    for (int j1 = 0; j1 <= N && j1 < static_cast<int>(a[i1].size()); ++j1) {
      if (a[i1][j1] == 0) continue;
      for (int i2 = 0; i1 + i2 <= N && i2 < static_cast<int>(b.size()); ++i2)
        for (int j2 = 0; j1 + j2 <= N && j2 < static_cast<int>(b[i2].size()); ++j2)
          c[i1 + i2][j1 + j2] += a[i1][j1] * b[i2][j2];
    }
  return c;
}

Series2 series2_inv(const Series2& a, int N) {
  if (a.empty() || a[0].empty() || (a[0][0] != 1 && a[0][0] != -1))
    throw Error(Errc::InvalidArgument, "series inverse needs a unit constant term");
  Series2 b = grid(N);
  auto at = [&](int i, int j) -> BigInt {
    return i < static_cast<int>(a.size()) && j < static_cast<int>(a[i].size()) ? a[i][j] : BigInt(0);
  };
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i == 0 && j == 0) {
        b[0][0] = a[0][0];
        continue;
      }
      BigInt s = 0;
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q)
          if ((p || q) && b[i - p][j - q] != 0) s += at(p, q) * b[i - p][j - q];
      b[i][j] = -s * a[0][0];
    }
  return b;
}

Series series_binary_trees(int N) {
  if (N < 1) throw Error(Errc::InvalidArgument, "series order must be >= 1");
  // r = x (1 + r)^2, solved one coefficient at a time
  Series r(N + 1), s(N + 1);
  s[0] = 1;
  for (int k = 1; k <= N; ++k) {
    for (int a = 0; a < k; ++a) r[k] += s[a] * s[k - 1 - a];
    s[k] = r[k];
  }
  return r;
}

TreeSeries series_trees(int N) {
  TreeSeries t;
  t.r = series_binary_trees(N);
  // r1 = xb (1 + r2)^2, r2 = xw (1 + r1)^2, by increasing total degree
  t.r1 = grid(N);
  t.r2 = grid(N);
  const BigInt one = 1;
  auto sq_coef = [&](const Series2& f, int i, int j) {
    auto at = [&](int a, int b) -> const BigInt& { return (a == 0 && b == 0) ? one : f[a][b]; };
    BigInt c = 0;
    for (int a = 0; a <= i; ++a)
      for (int b = 0; b <= j; ++b) {
        const BigInt& u = at(a, b);
        if (u != 0) c += u * at(i - a, j - b);
      }
    return c;
  };
  for (int deg = 1; deg <= 2 * N; ++deg)
    for (int i = std::max(0, deg - N); i <= std::min(N, deg); ++i) {
      int j = deg - i;
      if (i >= 1) t.r1[i][j] = sq_coef(t.r2, i - 1, j);
      if (j >= 1) t.r2[i][j] = sq_coef(t.r1, i, j - 1);
    }
  return t;
}

Series series_dissections(int N) {
  Series r = series_binary_trees(N);
  Series r2 = series_mul(r, r, N);
  Series d(N + 1);
  for (int k = 0; k <= N; ++k) d[k] = 2 * r[k] - r2[k];
  return d;
}

Series2 series_dissections_ij(int N) {
  TreeSeries t = series_trees(N);
  Series2 p = series2_mul(t.r1, t.r2, N), d = grid(N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) d[i][j] = t.r1[i][j] + t.r2[i][j] - p[i][j];
  return d;
}

Series series_3connected(int N) {
  Series d = series_dissections(N);
  // denominator 1 + 2x + 2x^2 + x^2 D
  Series den(N + 1);
  den[0] = 1;
  if (N >= 1) den[1] += 2;
  if (N >= 2) den[2] += 2;
  for (int k = 0; k + 2 <= N; ++k) den[k + 2] += d[k];
  Series inv = series_inv(den, N);
  // (1 - x)/(1 + x) = 1 - 2x + 2x^2 - ...
  Series p(N + 1);
  for (int k = 0; k <= N; ++k) {
    BigInt lead = k == 0 ? BigInt(1) : BigInt(k % 2 ? -2 : 2);
    p[k] = lead - inv[k];
    if (p[k] < 0) throw Error(Errc::InvalidArgument, "negative 3-connected coefficient");
  }
  return p;
}

Series2 series_3connected_ij(int N) {
  Series2 d = series_dissections_ij(N);
  Series2 den = grid(N);
  den[0][0] = 1;
  if (N >= 1) {
    den[1][0] += 1;
    den[0][1] += 1;
    den[1][1] += 2;
  }
  for (int i = 0; i + 1 <= N; ++i)
    for (int j = 0; j + 1 <= N; ++j) den[i + 1][j + 1] += d[i][j];
  Series2 inv = series2_inv(den, N);
  // (1 - xb xw)/((1 + xb)(1 + xw)) only has terms with i == 0 or j == 0
  Series2 p = grid(N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      BigInt lead = (i && j) ? BigInt(0) : BigInt((i + j) % 2 ? -1 : 1);
      p[i][j] = lead - inv[i][j];
      if (p[i][j] < 0) throw Error(Errc::InvalidArgument, "negative 3-connected coefficient");
    }
  return p;
}

Series series_undecomposable(int N) {
  Series p = series_3connected(N + 2);
  return Series(p.begin() + 2, p.end());
}

BigInt count_rooted_3connected(long edges) {
  if (edges < 2) return 0;
  return series_3connected(static_cast<int>(std::max(1L, edges - 2)))[edges - 2];
}

BigInt count_rooted_3connected_ij(long vertices, long faces) {
  if (vertices < 2 || faces < 2) return 0;
  int N = static_cast<int>(std::max({vertices, faces, 3L}) - 2);
  return series_3connected_ij(N)[vertices - 2][faces - 2];
}

BigInt count_rooted_triangulations(long n) {
  if (n < 0) return 0;
  return 2 * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2));
}

BigInt count_unrooted_triangulations(long n) {
  if (n < 0) return 0;
  BigRat total = BigRat(2 * factorial(4 * n + 1), 3 * factorial(n + 1) * factorial(3 * n + 2));
  if (n % 3 == 1) {
    long k = (n - 1) / 3;
    total += BigRat(4 * factorial(4 * k + 1), 3 * factorial(k) * factorial(3 * k + 2));
  } else if (n % 3 == 0) {
    long k = n / 3;
    total += BigRat(2 * factorial(4 * k), 3 * factorial(k) * factorial(3 * k + 1));
  }
  return as_integer(total, "unrooted triangulation count");
}

}  // namespace pmaps
