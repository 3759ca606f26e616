#pragma once

#include <stdexcept>
#include <vector>

#include "qtpos/qt_poly.hpp"
#include "qtpos/shapes.hpp"

namespace qtpos {

/// lambda = (3^a 2^b 1^c)
struct ThreePartShape {
  int a = 0;
  int b = 0;
  int c = 0;

  Partition partition() const { return three_part_shape(a, b, c); }
  int size() const { return 3 * a + 2 * b + c; }
};

/// Arguments of g_lambda[a, k1, k2]; symmetric in (k1, k2).
struct BlockArgs {
  int a = 0;
  int k1 = 0;
  int k2 = 0;

  auto operator<=>(const BlockArgs &) const = default;
};

/// w(w1, w2) = (t^{w1} [w2]_{t^2,q} - q^{w1} [w2]_{q^2,t}) / (t - q),
/// the contribution of one filling with w1 ones and w2 twos.
QtPoly w_weight(int omega1, int omega2);

/// sum_{j=0}^{k1} sum_{i=0}^{k2} w(a+i+j, a+k1+k2-i-j)
QtPoly g_block_bruteforce(const BlockArgs &args);

/// g[0,0,k] = sum_i (qt)^i [k - i - floor((i+1)/2) -> 2k - 2 - 3i],
/// i up to floor((2k-2)/3) - [k = 1 mod 3].
QtPoly g_00k_closed(int k);

/// The ranges [lo -> hi] (with their qt shift) summed by g_00k_closed.
struct ShiftedRange {
  int shift;
  int lo;
  int hi;
};
std::vector<ShiftedRange> g_00k_ranges(int k);

/// g[a,0,k] = (qt)^a g[0,0,k] + sum_{i=1}^{a} (qt)^{a-i} [k+3i-2 -> 2k+3i-2]
QtPoly g_a0k_closed(int a, int k);

/// g[a,k1,k2] = sum_{i=0}^{min} g[a+i, 0, k1+k2-2i]
QtPoly g_block(const BlockArgs &args);

/// The block arguments summed for lambda = (3^a 2^b 1^c), in order.
std::vector<BlockArgs> recursion_terms(const ThreePartShape &shape);

QtPoly g_via_recursion(const ThreePartShape &shape);

/// g_{(1^n)}(1,1) == 2 * C(n+2, 4)
bool check_qt1(int n);

class InvalidSample : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Right-hand side of the t = 1/q specialization for k = 2 at q0:
/// q^{1 - 2(n-1)} / [3]_q * [n choose 2]_q * [n+2 choose 2]_q.
mpq_class rank_rhs(int n, const mpq_class &q0);

/// g_{(1^n)}(q0, 1/q0) == rank_rhs(n, q0) for every sample.
/// Throws InvalidSample for q0 in {0, 1, -1}.
bool check_rank(int n, const std::vector<mpq_class> &samples);

} // namespace qtpos
