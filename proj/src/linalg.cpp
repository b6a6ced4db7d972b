#include "wph/linalg.hpp"

#include <algorithm>

#include "wph/errors.hpp"

namespace wph {

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
    IntMatrix out;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long long v : r) row.emplace_back(static_cast<long>(v));
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    std::size_t inner = a[0].size();
    if (b.size() != inner) throw InvalidInput("matrix shape mismatch");
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), std::vector<Integer>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix out;
    for (const auto& r : a) {
        std::vector<Rational> row;
        for (const auto& v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return out;
}

// Runs Bareiss elimination in place; returns the rank and the sign of the row permutation.
static std::size_t bareiss(IntMatrix& m, int& sign) {
    sign = 1;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::size_t bareiss_rank(IntMatrix m) {
    int sign;
    return bareiss(m, sign);
}

Integer bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign;
    if (bareiss(m, sign) < n) return 0;
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Rational>> nullspace(RatMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// out = p * v - q * w, dropping zeros.
static SparseVec combine(const SparseVec& v, const Integer& p, const SparseVec& w, const Integer& q) {
    SparseVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.emplace_back(v[i].first, p * v[i].second);
            ++i;
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -q * w[j].second);
            ++j;
        } else {
            Integer x = p * v[i].second - q * w[j].second;
            if (x != 0) out.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

static Integer content(const SparseVec& v) {
    Integer g = 0;
    for (const auto& [c, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

static void make_primitive(SparseVec& v, Integer* removed = nullptr) {
    if (v.empty()) return;
    Integer g = content(v);
    if (v.back().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (removed) *removed = g;
}

bool SparseEchelon::insert(SparseVec v) {
    for (const auto& [c, x] : v)
        if (c < 0 || c >= ncols()) throw InvalidInput("sparse vector column out of range");
    make_primitive(v);
    while (!v.empty()) {
        int c = v.back().first;
        int r = pivot_row_[c];
        if (r < 0) {
            pivot_row_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(v));
            return true;
        }
        const SparseVec& row = rows_[r];
        Integer p = row.back().second, q = v.back().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        v = combine(v, p / g, row, q / g);
        make_primitive(v);
    }
    return false;
}

std::vector<int> SparseEchelon::non_pivot_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols(); ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

SparseVec SparseEchelon::reduce(SparseVec v, Rational& scale) const {
    scale = 1;
    int cursor = ncols();
    while (true) {
        // Largest pivot column strictly below the cursor.
        int idx = -1;
        for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) {
            int c = v[k].first;
            if (c < cursor && pivot_row_[c] >= 0) {
                idx = k;
                break;
            }
        }
        if (idx < 0) break;
        int c = v[idx].first;
        const SparseVec& row = rows_[pivot_row_[c]];
        Integer p = row.back().second, q = v[idx].second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        Integer pg = p / g;
        v = combine(v, pg, row, q / g);
        scale *= Rational(pg);
        Integer removed;
        make_primitive(v, &removed);
        if (!v.empty()) scale /= Rational(removed);
        cursor = c;
    }
    scale.canonicalize();
    return v;
}

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < d.size() && (d.empty() || i < d[0].size()); ++i) out.push_back(d[i][i]);
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    SmithForm s{m, identity_matrix(rows), identity_matrix(cols)};
    IntMatrix& a = s.d;
    auto row_op = [&](std::size_t target, std::size_t src, const Integer& f) {  // row_t -= f row_s
        for (std::size_t j = 0; j < cols; ++j) a[target][j] -= f * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[target][j] -= f * s.u[src][j];
    };
    auto col_op = [&](std::size_t target, std::size_t src, const Integer& f) {  // col_t -= f col_s
        for (std::size_t i = 0; i < rows; ++i) a[i][target] -= f * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.v[i][target] -= f * s.v[i][src];
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        std::swap(a[x], a[y]);
        std::swap(s.u[x], s.u[y]);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& r : a) std::swap(r[x], r[y]);
        for (auto& r : s.v) std::swap(r[x], r[y]);
    };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return s;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_op(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_op(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_op(t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
        }
    }
    return s;
}

IntMatrix integer_left_kernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<Integer> diag = s.diagonal();
    std::size_t rank = 0;
    while (rank < diag.size() && diag[rank] != 0) ++rank;
    // Rows of u beyond the rank satisfy u_i * a * v = 0, hence u_i * a = 0.
    IntMatrix out;
    for (std::size_t i = rank; i < a.size(); ++i) out.push_back(s.u[i]);
    return out;
}

}  // namespace wph
