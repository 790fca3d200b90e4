#ifndef ADHM_EXACTALG_HPP
#define ADHM_EXACTALG_HPP

#include <gmpxx.h>

#include "json.hpp"
#include <string>
#include <string_view>
#include <vector>

#include "adhm/errors.hpp"

namespace adhm::exactalg {

// Element of Q(i). gmpxx keeps both parts canonical.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar I() { return Scalar(0, 1); }
    static Scalar frac(long num, long den) { mpq_class q(num, den); q.canonicalize(); return Scalar(q); }
    static Scalar parse(std::string_view s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inv() const;
    std::string str() const;

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // total order used only for canonical sorting of multisets
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    // row-major nested initializer, convenient for fixtures
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }
    static Matrix column(const std::vector<Scalar>& v);
    static Matrix hstack(const std::vector<Matrix>& ms);
    static Matrix vstack(const std::vector<Matrix>& ms);
    static Matrix block_diag(const std::vector<Matrix>& ms);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return a_; }

    Matrix transpose() const;
    Matrix col(std::size_t j) const;
    Matrix sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    bool is_zero() const;
    Scalar trace() const;
    Matrix conj() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned e);

// Column span with an independent basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
    // throws InvalidArgument if the columns are dependent
    Subspace(std::size_t ambient, Matrix basis);
    static Subspace span(const Matrix& columns);  // drops dependent columns
    static Subspace full(std::size_t n) { return Subspace(n, Matrix::identity(n)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    bool contains(const Matrix& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return dim() == o.dim() && contains(o); }
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace image(const Matrix& m) const;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

struct RankKernel {
    std::size_t rank;
    Subspace kernel;
};

struct Rref {
    Matrix r;
    std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);  // Singular if not invertible
// one solution of a x = b, or false
bool solve(const Matrix& a, const Matrix& b, Matrix& x);

// Univariate polynomial, coefficients in ascending degree, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> c);
    static UPoly linear_root(const Scalar& r) { return UPoly({-r, Scalar(1)}); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& lead() const { return c_.back(); }
    Scalar eval(const Scalar& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    std::string str(const std::string& var = "t") const;
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(UPoly a, UPoly b);

private:
    void trim();
    std::vector<Scalar> c_;
};

UPoly char_poly(const Matrix& m);
Subspace generalized_eigenspace(const Matrix& m, const Scalar& a);
// sorted multiset; NonSplitSpectrum when some root lies outside Q(i)
std::vector<Scalar> eigenvalue_multiset(const Matrix& m);
// distinct roots in Q(i) of p with multiplicities, throws NonSplitSpectrum if p does not split
std::vector<std::pair<Scalar, int>> roots_in_qi(const UPoly& p);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace adhm::exactalg

#endif
