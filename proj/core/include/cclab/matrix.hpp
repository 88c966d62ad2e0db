#pragma once

#include <cstdint>
#include <vector>

#include "cclab/gf.hpp"

namespace cclab {

// Square matrices over a Field, row-major, entries encoded as in Field.
// Vectors are columns; g acts on v as g*v.
using Mat = std::vector<int>;

Mat mat_identity(int n);
Mat mat_zero(int n);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b, int n);
Mat mat_add(const Field& F, const Mat& a, const Mat& b, int n);
Mat mat_sub(const Field& F, const Mat& a, const Mat& b, int n);
Mat mat_scale(const Field& F, int s, const Mat& a);
Mat mat_transpose(const Mat& a, int n);
// entrywise x -> x^(p^k)
Mat mat_frobenius(const Field& F, const Mat& a, int k);
int mat_det(const Field& F, Mat a, int n);
// throws std::domain_error when singular
Mat mat_inverse(const Field& F, const Mat& a, int n);

// Rectangular helpers (rows x cols, row-major).
int rank_rect(const Field& F, std::vector<int> a, int rows, int cols);
// Basis of {x : a x = 0}, each vector of length cols.
std::vector<std::vector<int>> nullspace_rect(const Field& F, std::vector<int> a, int rows, int cols);

int mat_rank(const Field& F, const Mat& a, int n);
// dim Ker(a - s*I)
int eigenspace_dim(const Field& F, const Mat& a, int n, int s);

std::vector<int> mat_vec(const Field& F, const Mat& a, const std::vector<int>& v, int n);
// x^T B y
int bilinear(const Field& F, const Mat& gram, const std::vector<int>& x, const std::vector<int>& y, int n);

// Kronecker product (a is m x m, b is n x n)
Mat mat_kron(const Field& F, const Mat& a, int m, const Mat& b, int n);

}  // namespace cclab
