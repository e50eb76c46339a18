#pragma once

#include <span>
#include <vector>

namespace csitq {

/// (1+x)*log2(1+x) for x >= -1, with the 0*log(0) = 0 convention at x = -1.
/// Evaluated through log1p so that sums of these terms stay accurate when
/// they cancel down to O(x^2).
double xlog2_1p(double x);

/// Shannon entropy in bits. Entries must be non-negative; 0*log(0) = 0.
double entropy(std::span<const double> dist);

/// Binary entropy H([q, 1-q]) in bits, q in [0, 1].
double binary_entropy(double q);

/// 1 - H_b(1/2 + eps) for eps in [-1/2, 1/2], computed without the
/// cancellation that the direct form suffers near eps = 0.
double one_minus_hb_at_bias(double eps);

/// Mutual information I(X;Y) in bits of a joint distribution given row-major
/// as joint[x*ny + y].
double mutual_information(std::span<const double> joint, int nx, int ny);

}  // namespace csitq
