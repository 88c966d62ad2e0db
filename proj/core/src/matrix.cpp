#include "cclab/matrix.hpp"

#include <stdexcept>

namespace cclab {

Mat mat_identity(int n) {
    Mat r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) r[i * n + i] = 1;
    return r;
}

Mat mat_zero(int n) { return Mat(static_cast<size_t>(n) * n, 0); }

Mat mat_mul(const Field& F, const Mat& a, const Mat& b, int n) {
    Mat r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                int bkj = b[k * n + j];
                if (bkj != 0) r[i * n + j] = F.add(r[i * n + j], F.mul(aik, bkj));
            }
        }
    return r;
}

Mat mat_add(const Field& F, const Mat& a, const Mat& b, int n) {
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    (void)n;
    return r;
}

Mat mat_sub(const Field& F, const Mat& a, const Mat& b, int n) {
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    (void)n;
    return r;
}

Mat mat_scale(const Field& F, int s, const Mat& a) {
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
    return r;
}

Mat mat_transpose(const Mat& a, int n) {
    Mat r(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[j * n + i] = a[i * n + j];
    return r;
}

Mat mat_frobenius(const Field& F, const Mat& a, int k) {
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.frobenius(a[i], k);
    return r;
}

int mat_det(const Field& F, Mat a, int n) {
    int det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r * n + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = F.neg(det);
        }
        int pv = a[c * n + c];
        det = F.mul(det, pv);
        int pinv = F.inv(pv);
        for (int r = c + 1; r < n; ++r) {
            int m = F.mul(a[r * n + c], pinv);
            if (m == 0) continue;
            for (int j = c; j < n; ++j) a[r * n + j] = F.sub(a[r * n + j], F.mul(m, a[c * n + j]));
        }
    }
    return det;
}

Mat mat_inverse(const Field& F, const Mat& a0, int n) {
    Mat a = a0;
    Mat inv = mat_identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r * n + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[c * n + j]);
                std::swap(inv[piv * n + j], inv[c * n + j]);
            }
        int pinv = F.inv(a[c * n + c]);
        for (int j = 0; j < n; ++j) {
            a[c * n + j] = F.mul(a[c * n + j], pinv);
            inv[c * n + j] = F.mul(inv[c * n + j], pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            int m = a[r * n + c];
            if (m == 0) continue;
            for (int j = 0; j < n; ++j) {
                a[r * n + j] = F.sub(a[r * n + j], F.mul(m, a[c * n + j]));
                inv[r * n + j] = F.sub(inv[r * n + j], F.mul(m, inv[c * n + j]));
            }
        }
    }
    return inv;
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<int> rref(const Field& F, std::vector<int>& a, int rows, int cols) {
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (a[r * cols + c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[row * cols + j]);
        int pinv = F.inv(a[row * cols + c]);
        for (int j = 0; j < cols; ++j) a[row * cols + j] = F.mul(a[row * cols + j], pinv);
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            int m = a[r * cols + c];
            if (m == 0) continue;
            for (int j = 0; j < cols; ++j) a[r * cols + j] = F.sub(a[r * cols + j], F.mul(m, a[row * cols + j]));
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

}  // namespace

int rank_rect(const Field& F, std::vector<int> a, int rows, int cols) {
    return static_cast<int>(rref(F, a, rows, cols).size());
}

std::vector<std::vector<int>> nullspace_rect(const Field& F, std::vector<int> a, int rows, int cols) {
    auto piv = rref(F, a, rows, cols);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<int> v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(a[r * cols + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int mat_rank(const Field& F, const Mat& a, int n) { return rank_rect(F, a, n, n); }

int eigenspace_dim(const Field& F, const Mat& a, int n, int s) {
    Mat b = a;
    for (int i = 0; i < n; ++i) b[i * n + i] = F.sub(b[i * n + i], s);
    return n - mat_rank(F, b, n);
}

std::vector<int> mat_vec(const Field& F, const Mat& a, const std::vector<int>& v, int n) {
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < n; ++j)
            if (a[i * n + j] != 0 && v[j] != 0) s = F.add(s, F.mul(a[i * n + j], v[j]));
        r[i] = s;
    }
    return r;
}

int bilinear(const Field& F, const Mat& gram, const std::vector<int>& x, const std::vector<int>& y, int n) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            int g = gram[i * n + j];
            if (g != 0 && y[j] != 0) s = F.add(s, F.mul(x[i], F.mul(g, y[j])));
        }
    }
    return s;
}

Mat mat_kron(const Field& F, const Mat& a, int m, const Mat& b, int n) {
    int N = m * n;
    Mat r(static_cast<size_t>(N) * N, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int aij = a[i * m + j];
            if (aij == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) r[(i * n + k) * N + (j * n + l)] = F.mul(aij, b[k * n + l]);
        }
    return r;
}

}  // namespace cclab
