#ifndef ADHM_FORMS_HPP
#define ADHM_FORMS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adhm/exactalg.hpp"

namespace adhm::forms {

using exactalg::Matrix;
using exactalg::Scalar;
using exactalg::Subspace;

// SpData: V orthogonal, W symplectic. SOData: V symplectic, W orthogonal.
enum class Flavor { SpData, SOData };

// Standard: symplectic pairs (e1,e2)=(e3,e4)=...=1 and identity for orthogonal spaces.
// Weight: orthogonal spaces use hyperbolic pairs (u1,u2)=1 (plus one unit vector when the
// dimension is odd) so that the maximal torus acts diagonally.
enum class GramStyle { Standard, Weight };

std::string flavor_name(Flavor f);  // "sp" / "so"
Flavor parse_flavor(const std::string& s);

struct BilinearSpace {
    std::size_t dim = 0;
    int epsilon = 1;
    Matrix gram;

    static BilinearSpace symplectic(std::size_t n);
    static BilinearSpace orthogonal(std::size_t n, GramStyle style = GramStyle::Standard);
    void validate() const;
};

struct FramedSetting {
    BilinearSpace V, W;
    Flavor flavor = Flavor::SOData;
    GramStyle style = GramStyle::Standard;

    static FramedSetting make(Flavor f, std::size_t N, std::size_t k, GramStyle style = GramStyle::Standard);
    std::size_t k() const { return V.dim; }
    std::size_t N() const { return W.dim; }
};

struct ADHMDatum {
    FramedSetting setting;
    Matrix B1, B2, i, j;

    // j is derived as the right adjoint of i; B1, B2 are checked to lie in p(V)
    static ADHMDatum make(const FramedSetting& s, Matrix B1, Matrix B2, Matrix i);
    static ADHMDatum zero(const FramedSetting& s);
};

struct LieSplit {
    Matrix t_part, p_part;
};

Matrix right_adjoint(const Matrix& f, const BilinearSpace& src, const BilinearSpace& dst);
LieSplit tp_split(const Matrix& X, const BilinearSpace& V);
bool in_p(const Matrix& X, const BilinearSpace& V);
bool in_t(const Matrix& X, const BilinearSpace& V);

// Bases of t(V) and p(V) as G^{-1}S with S the elementary (anti)symmetric matrices.
// The coordinate of X along the basis element for the index pair (a,b), a<=b, is (G X)_{ab}.
struct IndexPair {
    std::size_t a, b;
};
std::vector<IndexPair> t_index(const BilinearSpace& V);
std::vector<IndexPair> p_index(const BilinearSpace& V);
std::vector<Matrix> t_basis(const BilinearSpace& V);
std::vector<Matrix> p_basis(const BilinearSpace& V);
std::vector<Scalar> t_coords(const Matrix& X, const BilinearSpace& V);

// Torus weight of each basis vector as an exponent vector of length dim/2 (rounded down):
// vectors 2a, 2a+1 carry z_a and z_a^-1, a trailing odd vector carries 0.
// InvalidArgument unless the torus acts diagonally (symplectic, or orthogonal in Weight style).
std::vector<std::vector<int>> torus_weights(const BilinearSpace& V);

Matrix moment_map(const ADHMDatum& x);
Matrix commutator_map(const Matrix& B1, const Matrix& B2, const BilinearSpace& V);
Matrix rho(const Matrix& i, const FramedSetting& s);  // i i*
Matrix pi(const Matrix& i, const FramedSetting& s);   // i* i

// smallest (B1,B2)-invariant subspace containing Im(i)
Subspace stable_closure(const ADHMDatum& x);
// largest (B1,B2)-invariant subspace inside Ker(j)
Subspace costable_obstruction(const ADHMDatum& x);
bool is_stable(const ADHMDatum& x);
bool is_costable(const ADHMDatum& x);

std::vector<Matrix> stabilizer_lie(const ADHMDatum& x);

// F: wedge^2 p' -> t on the fixed basis v1..v5 of symplectic C^4; columns ordered
// (1,2),(1,3),...,(4,5), rows are t-coordinates.
Matrix wedge_bracket_iso();

// Cayley transform of a random element of t(V) with coefficients in {-3..3}.
Matrix random_isometry(const BilinearSpace& V, std::mt19937_64& rng);
Matrix random_isometry(const BilinearSpace& V, std::uint64_t seed);
// small integer in [-r, r], portable across standard libraries
long small_int(std::mt19937_64& rng, long r = 3);

// [B1,B2]^2 = c Id for trace-free B1, B2 in p of symplectic C^4
Scalar scalar_commutator_check(const Matrix& B1, const Matrix& B2, const BilinearSpace& V);

// (g,h).x = (g B1 g^-1, g B2 g^-1, g i h^-1)
ADHMDatum act(const Matrix& g, const Matrix& h, const ADHMDatum& x);
// (B1,B2) -> (a B1 + b B2, c B1 + d B2)
ADHMDatum act_sl2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const ADHMDatum& x);

nlohmann::json to_json(const ADHMDatum& x);
ADHMDatum datum_from_json(const nlohmann::json& j);

}  // namespace adhm::forms

namespace adhm::fixtures {

using exactalg::Matrix;
using exactalg::Scalar;

enum class Type { I = 1, II, III, IV };

forms::FramedSetting setting_n3k4();
// 2x2 building blocks
Matrix blk_I();
Matrix blk_J();
Matrix blk_H();
Matrix blk_X();
Matrix blk_Y();
Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

Matrix v(int n);  // n = 1..5
Matrix B1(Type t);
Matrix B2(Type t);
Matrix i_map(Type t);
forms::ADHMDatum x(Type t);
// corrected stabilizer of x^(I)
std::vector<Matrix> spx_basis();
// the ten brackets [v_a, v_b], a<b, as printed
std::vector<std::pair<std::pair<int, int>, Matrix>> bracket_table();

std::vector<std::string> names();
nlohmann::json named(const std::string& name);  // NoMatch-style InvalidArgument if unknown
Type parse_type(const std::string& s);
std::string type_name(Type t);

}  // namespace adhm::fixtures

#endif
