#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gns/numeric.hpp"

namespace gns {

// Dense row-major matrix over an exact scalar (Int or Rat).
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[a] += f * row[b]
    void add_row(std::size_t a, std::size_t b, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
    }

    void add_col(std::size_t a, std::size_t b, const T& f) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
    }

    void scale_row(std::size_t a, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) *= f;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;

inline RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

// Induced infinity norm: max over rows of the sum of entry magnitudes.
inline Rat inf_norm(const RatMatrix& a) {
    Rat best(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rat s(0);
        for (std::size_t j = 0; j < a.cols(); ++j) s += rat_abs(a(i, j));
        if (s > best) best = s;
    }
    return best;
}

// Fraction-free Gaussian elimination (Bareiss). Exact integer determinant.
inline Int det_bareiss(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Int(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss' identity
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Gauss-Jordan inverse over the rationals. Returns nullopt if singular.
inline std::optional<RatMatrix> rat_inverse(RatMatrix a) {
    const std::size_t n = a.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        a.swap_rows(k, p);
        inv.swap_rows(k, p);
        const Rat piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Solves A x = b exactly over the rationals. Returns nullopt if singular.
inline std::optional<std::vector<Rat>> solve_rational(RatMatrix a, std::vector<Rat> b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        a.swap_rows(k, p);
        std::swap(b[k], b[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

struct SmithForm {
    IntMatrix u;               // unimodular row transform
    IntMatrix v;               // unimodular column transform
    std::vector<Int> divisors; // diagonal of U*A*V, nonnegative, s_i | s_{i+1}
};

// Smith normal form with transforms: u * a * v has the elementary divisors
// on the diagonal. Pivot selection is deterministic (least |entry|, then
// row-major position), so residue enumeration downstream is reproducible.
inline SmithForm smith_normal_form(IntMatrix s) {
    const std::size_t m = s.rows(), n = s.cols();
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    const auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int best_abs(0);
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (s(i, j) == 0) continue;
                Int a = abs_int(s(i, j));
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = a;
                }
            }
        return best;
    };

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        auto piv = find_pivot(t);
        if (!piv) break;
        s.swap_rows(t, piv->first);
        u.swap_rows(t, piv->first);
        s.swap_cols(t, piv->second);
        v.swap_cols(t, piv->second);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                const Int q = floor_div(s(i, t), s(t, t));
                s.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (s(i, t) != 0) {  // remainder becomes the smaller pivot
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                const Int q = floor_div(s(t, j), s(t, t));
                s.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // Divisibility fix-up: s(t,t) must divide the rest of the block.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n && !fixed; ++j)
                if (s(i, j) % s(t, t) != 0) {
                    s.add_row(t, i, Int(1));
                    u.add_row(t, i, Int(1));
                    fixed = true;
                }
        if (fixed) {
            --t;  // redo this pivot with the new row mixed in
            continue;
        }

        if (s(t, t) < 0) {
            s.scale_row(t, Int(-1));
            u.scale_row(t, Int(-1));
        }
    }

    SmithForm out;
    out.divisors.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(s(i, i));
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence,
// run over the rationals; coefficients of an integer matrix are integral.
// Returned low-to-high: c_0, c_1, ..., c_{n-1}, 1.
inline std::vector<Int> charpoly(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rat> coeff(n + 1, Rat(0));
    coeff[n] = Rat(1);
    RatMatrix ra = to_rational(a);
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = ra * m;
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        const Rat c = -tr / Rat(static_cast<int>(k));
        coeff[n - k] = c;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
    }
    std::vector<Int> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (boost::multiprecision::denominator(coeff[i]) != 1)
            throw Error("charpoly coefficient not integral");
        out[i] = boost::multiprecision::numerator(coeff[i]);
    }
    return out;
}

}  // namespace gns
