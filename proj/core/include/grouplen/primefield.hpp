#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grouplen {

// Dense matrix over the prime field F_p, p < 2^16.  Entries are reduced
// residues.  Row-vector convention: vectors multiply matrices from the left,
// so right modules act by right multiplication throughout.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(unsigned rows, unsigned cols, std::uint32_t p);
    static FpMatrix identity(unsigned n, std::uint32_t p);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t at(unsigned r, unsigned c) const;
    void set(unsigned r, unsigned c, std::uint32_t value);

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t c) const;
    FpMatrix transposed() const;
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

    bool is_identity() const;
    bool is_zero() const;
    std::string to_string() const;

private:
    unsigned rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> data_;  // row-major
};

// Row-vector helpers.
std::vector<std::uint32_t> row_times_matrix(const std::vector<std::uint32_t>& v,
                                            const FpMatrix& m);

// Gaussian elimination utilities (all deterministic).
FpMatrix row_echelon(const FpMatrix& m);           // reduced row echelon form
unsigned rank(const FpMatrix& m);
std::vector<std::vector<std::uint32_t>> nullspace_basis(const FpMatrix& m);
// Inverse; throws std::invalid_argument when singular.
FpMatrix inverse(const FpMatrix& m);
// Solve x * A = b for a row vector x; empty optional when inconsistent is
// not needed -- throws std::invalid_argument instead (callers know shape).
std::vector<std::uint32_t> solve_left(const FpMatrix& A,
                                      const std::vector<std::uint32_t>& b);

// Spin the seed rows under right multiplication by the given matrices and
// return a reduced basis of the smallest invariant subspace containing them.
std::vector<std::vector<std::uint32_t>> spin_basis(
    const std::vector<std::vector<std::uint32_t>>& seeds,
    const std::vector<FpMatrix>& actions);

// Characteristic polynomial, lowest degree first, leading coefficient 1.
// Hessenberg reduction followed by the determinant recurrence.
std::vector<std::uint32_t> char_poly(const FpMatrix& m);

// Polynomial utilities over F_p (coefficient vectors, lowest degree first,
// no trailing zeros except the zero polynomial {}).
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p);
std::vector<std::uint32_t> poly_mod(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& m,
                                    std::uint32_t p);
std::vector<std::uint32_t> poly_gcd(std::vector<std::uint32_t> a,
                                    std::vector<std::uint32_t> b,
                                    std::uint32_t p);
std::vector<std::uint32_t> poly_derivative(const std::vector<std::uint32_t>& a,
                                           std::uint32_t p);
// Evaluate a polynomial at a square matrix.
FpMatrix poly_eval(const std::vector<std::uint32_t>& poly, const FpMatrix& x);

// Distinct monic irreducible factors (Berlekamp), sorted by (degree,
// coefficient sequence).  Multiplicities are not reported.
std::vector<std::vector<std::uint32_t>> distinct_irreducible_factors(
    const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace grouplen
