#pragma once

#include "zassen/coefficients.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zassen {

/// Small dense matrix over the exact rationals.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational &at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    const Rational &at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    RationalMatrix operator+(const RationalMatrix &o) const;
    RationalMatrix operator-(const RationalMatrix &o) const;
    RationalMatrix operator*(const RationalMatrix &o) const;
    RationalMatrix scaled(const Rational &c) const;
    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;
    bool is_zero() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline RationalMatrix mat_commutator(const RationalMatrix &a, const RationalMatrix &b)
{
    return a * b - b * a;
}

/// The block-upper-triangular 2n x 2n construction: commutative elements
/// [[a I, A], [0, a I]] and idealiser elements [[E11, E12], [0, E22]].
struct BlockMatrixExample {
    int n = 1;
    Rational a;
    RationalMatrix A;   // n x n
    RationalMatrix E11, E12, E22;

    RationalMatrix c_element() const;                       // from (a, A)
    static RationalMatrix c_element(int n, const Rational &a, const RationalMatrix &A);
    RationalMatrix d_element() const;                       // from (E11, E12, E22)
    /// True when m = [[c I, C], [0, c I]] for some scalar c and block C.
    static bool in_commutative_algebra(const RationalMatrix &m, int n);
};

struct MatrixReport {
    bool passed = true;
    std::string detail;
    unsigned trials_run = 0;
};

/// (i) [d, x] lies in the commutative algebra for random x; (ii) the explicit
/// commutator rule holds verbatim for the matrix realisation: with
/// <x>_k = (x d^k + d^k x)/2,
///   [<x>_k, <y>_l] == sum_{n,i} lambda_{n,i}^{k,l} <D^i x . D^{2n+1-i} y>_{k+l-2n-1},
/// all in exact rational arithmetic.
MatrixReport matrix_example_verify(const BlockMatrixExample &example, unsigned k, unsigned l,
                                   unsigned trials, std::uint64_t seed = 1);

/// Convenience: random example blocks of size n from the seed.
BlockMatrixExample random_block_example(int n, std::uint64_t seed);

} // namespace zassen
