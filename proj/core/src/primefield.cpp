#include "grouplen/primefield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grouplen {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::invalid_argument("division by zero in F_p");
    return mod_pow(a, p - 2, p);  // p prime
}

void check_modulus(std::uint32_t p) {
    if (p < 2 || p >= (1u << 16)) {
        throw std::invalid_argument("FpMatrix modulus must satisfy 2 <= p < 2^16");
    }
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw std::invalid_argument("FpMatrix modulus must be prime");
    }
}

}  // namespace

FpMatrix::FpMatrix(unsigned rows, unsigned cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(std::size_t(rows) * cols, 0) {
    check_modulus(p);
}

FpMatrix FpMatrix::identity(unsigned n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (unsigned i = 0; i < n; ++i) m.data_[std::size_t(i) * n + i] = 1 % p;
    return m;
}

std::uint32_t FpMatrix::at(unsigned r, unsigned c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("FpMatrix::at");
    return data_[std::size_t(r) * cols_ + c];
}

void FpMatrix::set(unsigned r, unsigned c, std::uint32_t value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("FpMatrix::set");
    data_[std::size_t(r) * cols_ + c] = value % p_;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) {
        throw std::invalid_argument("FpMatrix addition shape mismatch");
    }
    FpMatrix out(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = (data_[i] + o.data_[i]) % p_;
    }
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) {
        throw std::invalid_argument("FpMatrix subtraction shape mismatch");
    }
    FpMatrix out(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
    }
    return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) {
        throw std::invalid_argument("FpMatrix product shape mismatch");
    }
    FpMatrix out(rows_, o.cols_, p_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned k = 0; k < cols_; ++k) {
            const std::uint64_t a = data_[std::size_t(i) * cols_ + k];
            if (a == 0) continue;
            const std::uint32_t* orow = &o.data_[std::size_t(k) * o.cols_];
            std::uint32_t* out_row = &out.data_[std::size_t(i) * o.cols_];
            for (unsigned j = 0; j < o.cols_; ++j) {
                out_row[j] = static_cast<std::uint32_t>((out_row[j] + a * orow[j]) % p_);
            }
        }
    }
    return out;
}

FpMatrix FpMatrix::scaled(std::uint32_t c) const {
    FpMatrix out(rows_, cols_, p_);
    const std::uint64_t cc = c % p_;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = static_cast<std::uint32_t>(cc * data_[i] % p_);
    }
    return out;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix out(cols_, rows_, p_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            out.data_[std::size_t(j) * rows_ + i] = data_[std::size_t(i) * cols_ + j];
        }
    }
    return out;
}

bool FpMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            if (data_[std::size_t(i) * cols_ + j] != (i == j ? 1u % p_ : 0u)) return false;
        }
    }
    return true;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

std::string FpMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (unsigned i = 0; i < rows_; ++i) {
        if (i > 0) out << "; ";
        for (unsigned j = 0; j < cols_; ++j) {
            if (j > 0) out << " ";
            out << at(i, j);
        }
    }
    out << "] mod " << p_;
    return out.str();
}

std::vector<std::uint32_t> row_times_matrix(const std::vector<std::uint32_t>& v,
                                            const FpMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("row_times_matrix shape mismatch");
    const std::uint32_t p = m.modulus();
    std::vector<std::uint32_t> out(m.cols(), 0);
    for (unsigned i = 0; i < m.rows(); ++i) {
        const std::uint64_t a = v[i] % p;
        if (a == 0) continue;
        for (unsigned j = 0; j < m.cols(); ++j) {
            out[j] = static_cast<std::uint32_t>((out[j] + a * m.at(i, j)) % p);
        }
    }
    return out;
}

namespace {

// Dense rows-as-vectors workhorse used by the elimination routines.
struct RowSpace {
    std::vector<std::vector<std::uint32_t>> rows;
    std::uint32_t p;
};

// In-place reduced row echelon form; returns the pivot column of each row.
std::vector<unsigned> rref(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
    std::vector<unsigned> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const std::uint64_t inv = mod_inverse(rows[r][c], p);
        for (std::size_t j = c; j < ncols; ++j) {
            rows[r][j] = static_cast<std::uint32_t>(inv * rows[r][j] % p);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint64_t f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) {
                rows[i][j] = static_cast<std::uint32_t>(
                    (rows[i][j] + (p - 1) * f % p * rows[r][j]) % p);
            }
        }
        pivots.push_back(static_cast<unsigned>(c));
        ++r;
    }
    rows.resize(r);  // drop the zero rows
    return pivots;
}

std::vector<std::vector<std::uint32_t>> matrix_rows(const FpMatrix& m) {
    std::vector<std::vector<std::uint32_t>> rows(m.rows());
    for (unsigned i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (unsigned j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    }
    return rows;
}

}  // namespace

FpMatrix row_echelon(const FpMatrix& m) {
    auto rows = matrix_rows(m);
    rref(rows, m.modulus());
    FpMatrix out(m.rows(), m.cols(), m.modulus());
    for (unsigned i = 0; i < rows.size(); ++i) {
        for (unsigned j = 0; j < m.cols(); ++j) out.set(i, j, rows[i][j]);
    }
    return out;
}

unsigned rank(const FpMatrix& m) {
    auto rows = matrix_rows(m);
    return static_cast<unsigned>(rref(rows, m.modulus()).size());
}

// Basis of {v : v * m = 0}; vectors have length m.rows().  Equivalent to the
// classic kernel of the transposed matrix.
std::vector<std::vector<std::uint32_t>> nullspace_basis(const FpMatrix& m) {
    const std::uint32_t p = m.modulus();
    const unsigned n = m.rows();  // solution length
    auto rows = matrix_rows(m.transposed());
    auto pivots = rref(rows, p);
    std::vector<bool> is_pivot(n, false);
    for (unsigned c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (unsigned f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            // pivot variable = -coefficient of the free variable
            v[pivots[i]] = (p - rows[i][f] % p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const unsigned n = m.rows();
    const std::uint32_t p = m.modulus();
    // Augment with the identity and run the elimination once.
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(2 * n, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n + i] = 1;
    }
    auto pivots = rref(rows, p);
    if (pivots.size() != n || pivots.back() != n - 1) {
        // Any pivot escaping the left block means the left block is singular.
        bool ok = pivots.size() >= n;
        for (unsigned i = 0; ok && i < n; ++i) ok = pivots[i] == i;
        if (!ok) throw std::invalid_argument("inverse of singular matrix");
    }
    FpMatrix out(n, n, p);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
    }
    return out;
}

std::vector<std::uint32_t> solve_left(const FpMatrix& A, const std::vector<std::uint32_t>& b) {
    // x * A = b  <=>  A^T x^T = b^T.
    if (b.size() != A.cols()) throw std::invalid_argument("solve_left shape mismatch");
    const std::uint32_t p = A.modulus();
    const unsigned n = A.rows();
    auto rows = matrix_rows(A.transposed());
    for (unsigned i = 0; i < A.cols(); ++i) rows[i].push_back(b[i] % p);
    auto pivots = rref(rows, p);
    std::vector<std::uint32_t> x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) throw std::invalid_argument("solve_left: inconsistent system");
        x[pivots[i]] = rows[i][n];
    }
    return x;
}

std::vector<std::vector<std::uint32_t>> spin_basis(
    const std::vector<std::vector<std::uint32_t>>& seeds,
    const std::vector<FpMatrix>& actions) {
    if (seeds.empty()) return {};
    const std::uint32_t p = actions.empty() ? 2 : actions[0].modulus();
    const std::size_t dim = seeds[0].size();
    // Incremental reduced basis keyed by pivot column.
    std::vector<std::vector<std::uint32_t>> basis;   // kept reduced
    std::vector<unsigned> pivot_of;                  // pivot column per basis row
    auto reduce_insert = [&](std::vector<std::uint32_t> v) -> bool {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const std::uint64_t f = v[pivot_of[i]] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                v[j] = static_cast<std::uint32_t>((v[j] + (p - 1) * f % p * basis[i][j]) % p);
            }
        }
        std::size_t c = 0;
        while (c < dim && v[c] % p == 0) ++c;
        if (c == dim) return false;  // dependent
        const std::uint64_t inv = mod_inverse(v[c] % p, p);
        for (std::size_t j = 0; j < dim; ++j) {
            v[j] = static_cast<std::uint32_t>(inv * (v[j] % p) % p);
        }
        basis.push_back(std::move(v));
        pivot_of.push_back(static_cast<unsigned>(c));
        return true;
    };
    std::vector<std::size_t> queue;
    for (const auto& s : seeds) {
        if (s.size() != dim) throw std::invalid_argument("spin_basis seed length mismatch");
        if (reduce_insert(s)) queue.push_back(basis.size() - 1);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& a : actions) {
            if (reduce_insert(row_times_matrix(basis[queue[qi]], a))) {
                queue.push_back(basis.size() - 1);
            }
        }
    }
    // Canonicalize to reduced row echelon form.
    rref(basis, p);
    return basis;
}

namespace {

std::vector<std::uint32_t> poly_trim(std::vector<std::uint32_t> a, std::uint32_t p) {
    for (auto& c : a) c %= p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<std::uint32_t> poly_monic(std::vector<std::uint32_t> a, std::uint32_t p) {
    a = poly_trim(std::move(a), p);
    if (a.empty()) return a;
    const std::uint64_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(inv * c % p);
    return a;
}

// Division with remainder: a = q * m + r.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> poly_divmod(
    std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m, std::uint32_t p) {
    auto mm = poly_trim(m, p);
    if (mm.empty()) throw std::invalid_argument("polynomial division by zero");
    a = poly_trim(std::move(a), p);
    std::vector<std::uint32_t> q;
    if (a.size() >= mm.size()) q.assign(a.size() - mm.size() + 1, 0);
    const std::uint64_t lead_inv = mod_inverse(mm.back(), p);
    while (a.size() >= mm.size()) {
        const std::size_t shift = a.size() - mm.size();
        const std::uint64_t f = a.back() * lead_inv % p;
        q[shift] = static_cast<std::uint32_t>(f);
        for (std::size_t i = 0; i < mm.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + (p - 1) * (f * mm[i] % p)) % p);
        }
        a = poly_trim(std::move(a), p);
        if (a.size() < mm.size()) break;
    }
    return {poly_trim(std::move(q), p), std::move(a)};
}

}  // namespace

std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p) {
    auto aa = poly_trim(a, p);
    auto bb = poly_trim(b, p);
    if (aa.empty() || bb.empty()) return {};
    std::vector<std::uint32_t> out(aa.size() + bb.size() - 1, 0);
    for (std::size_t i = 0; i < aa.size(); ++i) {
        if (aa[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + std::uint64_t(aa[i]) * bb[j]) % p);
        }
    }
    return out;
}

std::vector<std::uint32_t> poly_mod(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& m, std::uint32_t p) {
    return poly_divmod(a, m, p).second;
}

std::vector<std::uint32_t> poly_gcd(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                    std::uint32_t p) {
    a = poly_trim(std::move(a), p);
    b = poly_trim(std::move(b), p);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a), p);
}

std::vector<std::uint32_t> poly_derivative(const std::vector<std::uint32_t>& a, std::uint32_t p) {
    if (a.size() <= 1) return {};
    std::vector<std::uint32_t> out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        out[i - 1] = static_cast<std::uint32_t>(std::uint64_t(a[i]) * (i % p) % p);
    }
    return poly_trim(std::move(out), p);
}

FpMatrix poly_eval(const std::vector<std::uint32_t>& poly, const FpMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("poly_eval needs a square matrix");
    const std::uint32_t p = x.modulus();
    FpMatrix acc(x.rows(), x.cols(), p);
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * x;
        if (poly[i] % p != 0) acc = acc + FpMatrix::identity(x.rows(), p).scaled(poly[i]);
    }
    return acc;
}

std::vector<std::uint32_t> char_poly(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly needs a square matrix");
    const unsigned n = m.rows();
    const std::uint32_t p = m.modulus();
    if (n == 0) return {1 % p};
    auto h = matrix_rows(m);

    // Similarity reduction to upper Hessenberg form with pivoting: a row
    // operation R_i <- R_i - f R_k is paired with the column operation
    // C_k <- C_k + f C_i.
    for (unsigned j = 0; j + 2 < n; ++j) {
        unsigned pivot = j + 1;
        while (pivot < n && h[pivot][j] % p == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            std::swap(h[pivot], h[j + 1]);
            for (unsigned r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
        }
        const std::uint64_t inv = mod_inverse(h[j + 1][j] % p, p);
        for (unsigned i = j + 2; i < n; ++i) {
            const std::uint64_t f = h[i][j] % p * inv % p;
            if (f == 0) continue;
            for (unsigned c = 0; c < n; ++c) {
                h[i][c] = static_cast<std::uint32_t>(
                    (h[i][c] + (p - 1) * (f * h[j + 1][c] % p)) % p);
            }
            for (unsigned r = 0; r < n; ++r) {
                h[r][j + 1] = static_cast<std::uint32_t>(
                    (h[r][j + 1] + f * h[r][i]) % p);
            }
        }
    }

    // Determinant recurrence on the leading principal minors of xI - H.
    std::vector<std::vector<std::uint32_t>> c(n + 1);
    c[0] = {1 % p};
    for (unsigned mm = 1; mm <= n; ++mm) {
        // c_m = (x - h[m-1][m-1]) * c_{m-1}
        std::vector<std::uint32_t> next(c[mm - 1].size() + 1, 0);
        for (std::size_t i = 0; i < c[mm - 1].size(); ++i) {
            next[i + 1] = (next[i + 1] + c[mm - 1][i]) % p;
            next[i] = static_cast<std::uint32_t>(
                (next[i] + std::uint64_t(p - 1) * (h[mm - 1][mm - 1] % p) % p * c[mm - 1][i]) % p);
        }
        std::uint64_t t = 1;
        for (unsigned i = 1; i < mm; ++i) {
            t = t * (h[mm - i][mm - i - 1] % p) % p;
            const std::uint64_t coef =
                std::uint64_t(p - 1) * (t * (h[mm - i - 1][mm - 1] % p) % p) % p;
            const auto& prev = c[mm - i - 1];
            for (std::size_t k = 0; k < prev.size(); ++k) {
                next[k] = static_cast<std::uint32_t>((next[k] + coef * prev[k]) % p);
            }
        }
        c[mm] = poly_trim(std::move(next), p);
    }
    return c[n];
}

namespace {

// p-th root of a polynomial with zero derivative: f(x) = g(x^p) over F_p, and
// the coefficients of g are those of f at the multiples of p.
std::vector<std::uint32_t> poly_pth_root(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f[i]);
    return poly_trim(std::move(out), p);
}

// Berlekamp factorization of a squarefree monic polynomial.
std::vector<std::vector<std::uint32_t>> berlekamp_squarefree(
    const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return {f};

    // Frobenius matrix: row i holds x^{ip} mod f.
    std::vector<std::uint32_t> xp = {0, 1};  // x
    {
        // x^p mod f by square-and-multiply.
        std::vector<std::uint32_t> acc = {1};
        std::vector<std::uint32_t> base = {0, 1};
        std::uint32_t e = p;
        while (e > 0) {
            if (e & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
            base = poly_mod(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        xp = std::move(acc);
    }
    FpMatrix q(n, n, p);
    std::vector<std::uint32_t> row = {1};
    for (unsigned i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) q.set(i, static_cast<unsigned>(j), row[j]);
        row = poly_mod(poly_mul(row, xp, p), f, p);
    }
    auto kernel = nullspace_basis(q - FpMatrix::identity(n, p));
    const std::size_t k = kernel.size();  // number of irreducible factors
    std::vector<std::vector<std::uint32_t>> factors = {f};
    if (k == 1) return factors;

    for (const auto& v : kernel) {
        if (factors.size() == k) break;
        auto vpoly = poly_trim(v, p);
        if (vpoly.size() <= 1) continue;  // constant vectors split nothing
        std::vector<std::vector<std::uint32_t>> next;
        for (auto& u : factors) {
            if (u.size() <= 2) {  // linear factor, already irreducible
                next.push_back(std::move(u));
                continue;
            }
            std::vector<std::vector<std::uint32_t>> pieces;
            auto rest = u;
            for (std::uint32_t s = 0; s < p && rest.size() > 1; ++s) {
                auto shifted = vpoly;
                if (shifted.empty()) shifted = {0};
                shifted[0] = (shifted[0] + p - s) % p;
                auto d = poly_gcd(rest, shifted, p);
                if (d.size() > 1 && d.size() < rest.size()) {
                    pieces.push_back(d);
                    rest = poly_monic(poly_divmod(rest, d, p).first, p);
                }
            }
            if (rest.size() > 1) pieces.push_back(rest);
            for (auto& piece : pieces) next.push_back(std::move(piece));
        }
        factors = std::move(next);
    }
    return factors;
}

void collect_distinct_factors(std::vector<std::uint32_t> f, std::uint32_t p,
                              std::vector<std::vector<std::uint32_t>>& out) {
    f = poly_monic(std::move(f), p);
    if (f.size() <= 1) return;
    auto df = poly_derivative(f, p);
    if (df.empty()) {
        collect_distinct_factors(poly_pth_root(f, p), p, out);
        return;
    }
    auto g = poly_gcd(f, df, p);
    auto s = poly_monic(poly_divmod(f, g, p).first, p);  // squarefree
    for (auto& factor : berlekamp_squarefree(s, p)) out.push_back(std::move(factor));
    if (g.size() > 1) collect_distinct_factors(std::move(g), p, out);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> distinct_irreducible_factors(
    const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    check_modulus(p);
    std::vector<std::vector<std::uint32_t>> out;
    collect_distinct_factors(poly, p, out);
    std::sort(out.begin(), out.end(),
              [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace grouplen
