#include "adhm/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace adhm {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NonSplitSpectrum: return "NonSplitSpectrum";
        case ErrorCode::NotInP: return "NotInP";
        case ErrorCode::NotScalar: return "NotScalar";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::NoMatch: return "NoMatch";
        case ErrorCode::NotCI: return "NotCI";
        case ErrorCode::InhomogeneousGenerators: return "InhomogeneousGenerators";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
        case ErrorCode::UnsupportedSetting: return "UnsupportedSetting";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::SpectraOverlap: return "SpectraOverlap";
        case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
        case ErrorCode::BlockMomentNonzero: return "BlockMomentNonzero";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::UnknownCheck: return "UnknownCheck";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace adhm

namespace adhm::exactalg {

// ---------------------------------------------------------------- Scalar

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorCode::Singular, "division by zero");
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

static std::string qstr(const mpq_class& q) { return q.get_str(); }

std::string Scalar::str() const {
    bool zr = sgn(re_) == 0, zi = sgn(im_) == 0;
    if (zr && zi) return "0";
    std::string out;
    if (!zr) out = qstr(re_);
    if (!zi) {
        mpq_class a = abs(im_);
        std::string mag = (a == 1) ? "I" : qstr(a) + "*I";
        if (sgn(im_) < 0)
            out += "-" + mag;
        else
            out += (zr ? "" : "+") + mag;
    }
    return out;
}

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty()) throw Error(ErrorCode::Parse, "empty number");
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

// Accepts sums of terms like "3/2", "-I", "2*I", "1/3*i", "I*5".
Scalar Scalar::parse(std::string_view sv) {
    std::string s;
    for (char c : sv)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty scalar");
    Scalar acc;
    std::size_t p = 0;
    while (p < s.size()) {
        int sign = 1;
        while (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -sign;
            ++p;
        }
        std::size_t q = p;
        while (q < s.size() && s[q] != '+' && s[q] != '-') ++q;
        std::string term = s.substr(p, q - p);
        if (term.empty()) throw Error(ErrorCode::Parse, "dangling sign in '" + s + "'");
        bool imag = false;
        std::string num;
        std::size_t start = 0;
        while (start <= term.size()) {
            std::size_t star = term.find('*', start);
            std::string f = term.substr(start, star == std::string::npos ? std::string::npos : star - start);
            if (f == "I" || f == "i") {
                if (imag) throw Error(ErrorCode::Parse, "repeated I in '" + s + "'");
                imag = true;
            } else {
                if (!num.empty()) throw Error(ErrorCode::Parse, "bad term '" + term + "'");
                num = f;
            }
            if (star == std::string::npos) break;
            start = star + 1;
        }
        mpq_class v = num.empty() ? mpq_class(1) : parse_rational(num);
        if (sign < 0) v = -v;
        if (imag)
            acc += Scalar(0, v);
        else
            acc += Scalar(v);
        p = q;
    }
    return acc;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) { return Matrix(v.size(), 1, v); }

Matrix Matrix::hstack(const std::vector<Matrix>& ms) {
    if (ms.empty()) return {};
    std::size_t r = ms[0].rows(), c = 0;
    for (auto& m : ms) {
        if (m.rows() != r) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
        c += m.cols();
    }
    Matrix out(r, c);
    std::size_t off = 0;
    for (auto& m : ms) {
        out.set_block(0, off, m);
        off += m.cols();
    }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& ms) {
    if (ms.empty()) return {};
    std::size_t c = ms[0].cols(), r = 0;
    for (auto& m : ms) {
        if (m.cols() != c) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
        r += m.rows();
    }
    Matrix out(r, c);
    std::size_t off = 0;
    for (auto& m : ms) {
        out.set_block(off, 0, m);
        off += m.rows();
    }
    return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& ms) {
    std::size_t r = 0, c = 0;
    for (auto& m : ms) r += m.rows(), c += m.cols();
    Matrix out(r, c);
    std::size_t ro = 0, co = 0;
    for (auto& m : ms) {
        out.set_block(ro, co, m);
        ro += m.rows();
        co += m.cols();
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::col(std::size_t j) const { return sub(0, j, rows_, 1); }

Matrix Matrix::sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "sub-block out of range");
    Matrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Matrix::trace() const {
    if (!square()) throw Error(ErrorCode::ShapeMismatch, "trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::conj() const {
    Matrix c(*this);
    for (auto& s : c.a_) s = s.conj();
    return c;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, unsigned e) {
    Matrix r = Matrix::identity(m.rows());
    for (unsigned k = 0; k < e; ++k) r = r * m;
    return r;
}

// ---------------------------------------------------------------- elimination

Rref rref(const Matrix& m) {
    Rref out{m, {}};
    Matrix& a = out.r;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Scalar inv = a(row, c).inv();
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c).is_zero()) continue;
            Scalar f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    return out;
}

RankKernel rank_kernel(const Matrix& m) {
    Rref e = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Matrix> vs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Matrix v(n, 1);
        v(f, 0) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.r(r, f);
        vs.push_back(std::move(v));
    }
    Matrix basis = vs.empty() ? Matrix(n, 0) : Matrix::hstack(vs);
    return {e.pivots.size(), Subspace(n, std::move(basis))};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Matrix();
    Rref e = rref(Matrix::hstack({m, Matrix::identity(n)}));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix not invertible");
    return e.r.sub(0, n, n, n);
}

bool solve(const Matrix& a, const Matrix& b, Matrix& x) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve");
    std::size_t n = a.cols(), k = b.cols();
    Rref e = rref(Matrix::hstack({a, b}));
    x = Matrix(n, k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return false;
        for (std::size_t j = 0; j < k; ++j) x(e.pivots[r], j) = e.r(r, n + j);
    }
    return true;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.rows() != ambient_) throw Error(ErrorCode::ShapeMismatch, "subspace basis rows");
    if (rank(basis_) != basis_.cols()) throw Error(ErrorCode::InvalidArgument, "subspace basis is dependent");
}

Subspace Subspace::span(const Matrix& columns) {
    Rref e = rref(columns);
    std::vector<Matrix> cols;
    for (auto p : e.pivots) cols.push_back(columns.col(p));
    if (cols.empty()) return Subspace(columns.rows());
    return Subspace(columns.rows(), Matrix::hstack(cols));
}

bool Subspace::contains(const Matrix& v) const {
    if (v.rows() != ambient_) throw Error(ErrorCode::ShapeMismatch, "vector size");
    if (v.is_zero()) return true;
    if (dim() == 0) return false;
    return rank(Matrix::hstack({basis_, v})) == dim();
}

bool Subspace::contains(const Subspace& o) const {
    if (o.dim() == 0) return true;
    if (dim() == 0) return false;
    return rank(Matrix::hstack({basis_, o.basis_})) == dim();
}

Subspace Subspace::sum(const Subspace& o) const {
    if (dim() == 0) return o;
    if (o.dim() == 0) return *this;
    return span(Matrix::hstack({basis_, o.basis_}));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    // x = A a = B b  <=>  [A | -B] (a,b) = 0
    RankKernel rk = rank_kernel(Matrix::hstack({basis_, -o.basis_}));
    if (rk.kernel.dim() == 0) return Subspace(ambient_);
    Matrix coeffs = rk.kernel.basis().sub(0, 0, dim(), rk.kernel.dim());
    return span(basis_ * coeffs);
}

Subspace Subspace::image(const Matrix& m) const {
    if (m.cols() != ambient_) throw Error(ErrorCode::ShapeMismatch, "image");
    if (dim() == 0) return Subspace(m.rows());
    return span(m * basis_);
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UPoly(d);
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    Scalar inv = lead().inv();
    std::vector<Scalar> d = c_;
    for (auto& x : d) x *= inv;
    return UPoly(d);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(c);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(c);
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
    std::vector<Scalar> rem = a.c_;
    int db = b.degree();
    std::vector<Scalar> quo(std::max(0, a.degree() - db + 1));
    Scalar inv = b.lead().inv();
    for (int d = a.degree(); d >= db; --d) {
        Scalar f = rem[d] * inv;
        if (f.is_zero()) continue;
        quo[d - db] = f;
        for (int k = 0; k <= db; ++k) rem[d - db + k] -= f * b.c_[k];
    }
    q = UPoly(quo);
    r = UPoly(rem);
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Scalar& c = c_[d];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = !c.is_real() && sgn(c.re()) != 0;
        std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
        std::string term;
        if (d == 0)
            term = compound ? "(" + cs + ")" : cs;
        else if (c == Scalar(1))
            term = mono;
        else if (c == Scalar(-1))
            term = "-" + mono;
        else
            term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!out.empty()) {
            if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        } else {
            out = term;
        }
    }
    return out;
}

// Faddeev-LeVerrier; fine in characteristic zero.
UPoly char_poly(const Matrix& a) {
    if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "char_poly of non-square matrix");
    std::size_t n = a.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix m = Matrix::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        Scalar t = (a * m).trace();
        c[n - k] = -t / Scalar(static_cast<long>(k));
    }
    return UPoly(c);
}

Subspace generalized_eigenspace(const Matrix& m, const Scalar& a) {
    if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "generalized_eigenspace of non-square matrix");
    std::size_t n = m.rows();
    Matrix s = m - Matrix::identity(n) * a;
    return rank_kernel(power(s, static_cast<unsigned>(n))).kernel;
}

// ---------------------------------------------------------------- roots in Q(i)

namespace {

struct GInt {
    mpz_class a, b;
};

bool gdiv_exact(const GInt& z, const GInt& d, GInt& q) {
    // z / d = z * conj(d) / N(d)
    mpz_class n = d.a * d.a + d.b * d.b;
    mpz_class re = z.a * d.a + z.b * d.b;
    mpz_class im = z.b * d.a - z.a * d.b;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
        return false;
    q.a = re / n;
    q.b = im / n;
    return true;
}

GInt gmul(const GInt& x, const GInt& y) { return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a}; }

// Divisors of a nonzero Gaussian integer, up to units.
std::vector<GInt> gaussian_divisors(const GInt& z) {
    mpz_class n = z.a * z.a + z.b * z.b;
    if (n > mpz_class("1000000000000"))
        throw Error(ErrorCode::NonSplitSpectrum, "coefficients too large for exact root search");
    std::vector<std::pair<GInt, int>> primes;
    GInt rest = z;
    mpz_class m = n;
    auto take = [&](const GInt& pi) {
        int e = 0;
        GInt q;
        while (gdiv_exact(rest, pi, q)) {
            rest = q;
            ++e;
        }
        if (e) primes.push_back({pi, e});
    };
    auto split_prime = [&](const mpz_class& p) {
        if (p == 2) {
            take({1, 1});
        } else if (p % 4 == 3) {
            take({p, 0});
        } else {
            // p = x^2 + y^2 splits as (x+iy)(x-iy)
            for (mpz_class x = 1;; ++x) {
                mpz_class y2 = p - x * x, y = sqrt(y2);
                if (y * y == y2) {
                    take({x, y});
                    take({x, -y});
                    return;
                }
            }
        }
    };
    for (mpz_class p = 2; p * p <= m; ++p) {
        if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
        split_prime(p);
    }
    if (m > 1) split_prime(m);
    std::vector<GInt> divs{{1, 0}};
    for (auto& [pi, e] : primes) {
        std::vector<GInt> next;
        for (auto& d : divs) {
            GInt cur = d;
            next.push_back(cur);
            for (int k = 0; k < e; ++k) {
                cur = gmul(cur, pi);
                next.push_back(cur);
            }
        }
        divs = std::move(next);
    }
    return divs;
}

}  // namespace

std::vector<std::pair<Scalar, int>> roots_in_qi(const UPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    std::vector<std::pair<Scalar, int>> out;
    std::vector<Scalar> c = p.coeffs();
    int zero_mult = 0;
    while (!c.empty() && c.front().is_zero()) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult) out.push_back({Scalar(0), zero_mult});
    UPoly rest(c);
    if (rest.degree() <= 0) return out;

    UPoly sq, r;
    UPoly::divmod(rest, UPoly::gcd(rest, rest.derivative()), sq, r);
    sq = sq.monic();

    mpz_class l = 1;
    for (auto& x : sq.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
    auto to_gint = [&](const Scalar& x) {
        mpq_class a = x.re() * l, b = x.im() * l;
        return GInt{a.get_num(), b.get_num()};
    };
    GInt c0 = to_gint(sq.coeffs().front()), cn = to_gint(sq.lead());
    auto d0 = gaussian_divisors(c0), dn = gaussian_divisors(cn);
    const GInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    std::vector<Scalar> found;
    for (auto& a : d0) {
        for (auto& b : dn) {
            for (auto& u : units) {
                GInt num = gmul(a, u);
                Scalar cand = Scalar(mpq_class(num.a), mpq_class(num.b)) / Scalar(mpq_class(b.a), mpq_class(b.b));
                if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
                if (sq.eval(cand).is_zero()) found.push_back(cand);
            }
            if (static_cast<int>(found.size()) == sq.degree()) break;
        }
        if (static_cast<int>(found.size()) == sq.degree()) break;
    }
    if (static_cast<int>(found.size()) < sq.degree())
        throw Error(ErrorCode::NonSplitSpectrum, "characteristic polynomial does not split over Q(i)");
    for (auto& root : found) {
        int mult = 0;
        UPoly lin = UPoly::linear_root(root);
        while (true) {
            UPoly q, rr;
            UPoly::divmod(rest, lin, q, rr);
            if (!rr.is_zero()) break;
            rest = q;
            ++mult;
        }
        out.push_back({root, mult});
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
}

std::vector<Scalar> eigenvalue_multiset(const Matrix& m) {
    std::vector<Scalar> out;
    if (m.rows() == 0) return out;
    for (auto& [r, k] : roots_in_qi(char_poly(m)))
        for (int j = 0; j < k; ++j) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Matrix& m) {
    nlohmann::json e = nlohmann::json::array();
    for (auto& s : m.entries()) e.push_back(s.str());
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    try {
        std::size_t r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
        const auto& e = j.at("entries");
        if (e.size() != r * c) throw Error(ErrorCode::Parse, "matrix entry count mismatch");
        std::vector<Scalar> v;
        for (auto& x : e) v.push_back(x.is_string() ? Scalar::parse(x.get<std::string>()) : Scalar(x.get<long>()));
        return Matrix(r, c, std::move(v));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::Parse, ex.what());
    }
}

}  // namespace adhm::exactalg
