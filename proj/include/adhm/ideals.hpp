#ifndef ADHM_IDEALS_HPP
#define ADHM_IDEALS_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adhm/forms.hpp"

namespace adhm::ideals {

constexpr std::size_t kMaxVars = 32;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
    std::uint32_t mask = 0;  // support bits

    static Monomial var(std::size_t v, unsigned power = 1);
    void recompute();
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // assumes divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const { return (mask & o.mask) == 0; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

struct Order {
    enum Kind { DegRevLex, Block } kind = DegRevLex;
    // Block: variables [0, nblock) are eliminated; degrevlex on that block first, then on the rest
    std::size_t nblock = 0;
    // sign of a - b
    int compare(const Monomial& a, const Monomial& b) const;
};

// 0 means the rationals
struct FieldSpec {
    std::uint32_t prime = 0;
    std::string str() const;  // "q" or "fp:<p>"
    static FieldSpec parse(const std::string& s);
};

struct Term {
    Monomial m;
    mpq_class c;
};

// Terms sorted descending in degrevlex, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Term> terms);  // combines and sorts
    static Polynomial constant(const mpq_class& c);
    static Polynomial variable(std::size_t v);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::uint32_t degree() const;
    bool is_homogeneous(const std::vector<std::vector<int>>& weights) const;
    std::string str(const std::vector<std::string>& vars) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const mpq_class& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Term> t_;
};

// Ideal generators over the rationals; reductions mod p happen inside the engine.
struct Ideal {
    std::vector<std::string> vars;
    std::vector<Polynomial> gens;
    std::string label;
    // optional multidegree per variable: doubled (q1, q2) then torus exponents
    std::vector<std::vector<int>> weights;

    std::size_t nvars() const { return vars.size(); }
    void validate() const;
};

struct GroebnerOptions {
    FieldSpec field;
    Order order;
    std::uint64_t budget = 2000000;  // S-pair reductions
};

// ADHM_LAB_BUDGET overrides the default budget when set
GroebnerOptions default_options();

struct GroebnerBasis {
    std::vector<std::string> vars;
    FieldSpec field;
    Order order;
    std::vector<Polynomial> basis;  // reduced, monic, sorted by leading monomial
    std::uint64_t reductions = 0;

    bool is_unit() const;
    std::vector<Monomial> leads() const;
};

GroebnerBasis groebner(const Ideal& I, const GroebnerOptions& opt = default_options());
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
bool contains(const GroebnerBasis& G, const Polynomial& f);

// -1 for the unit ideal
int krull_dimension(const GroebnerBasis& G);
bool is_complete_intersection(const Ideal& I, const GroebnerOptions& opt = default_options());
// NotCI unless I is a complete intersection
bool nonreduced_ci_test(const Ideal& I, const GroebnerOptions& opt = default_options());
// I intersected with the subring on keep (variable indices); result lives in those variables
Ideal elimination(const Ideal& I, const std::vector<std::size_t>& keep, const GroebnerOptions& opt = default_options());
bool radical_membership(const Polynomial& f, const Ideal& I, const GroebnerOptions& opt = default_options());

std::vector<std::vector<Polynomial>> jacobian(const Ideal& I);
// all size x size minors of a polynomial matrix
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& m, std::size_t size);

struct BuildOptions {
    bool traceless = false;                                   // commutator: B in trace-free p
    forms::GramStyle style = forms::GramStyle::Standard;      // Weight attaches torus weights
};

// kind: mu, mu_traceless, rho, pi_image_tags, commutator, product
Ideal build_ideal(const std::string& kind, std::size_t N, std::size_t k, forms::Flavor flavor,
                  const BuildOptions& opt = {});

struct MultigradedHilbert {
    int order = 0;  // bound on doubled total q-degree
    std::map<std::vector<int>, long> counts;
};

// Counts standard monomials by multidegree. The first two weight components are the
// doubled q-degrees; their sum must be positive for every variable and is truncated at order.
MultigradedHilbert multigraded_hilbert(const GroebnerBasis& G, const std::vector<std::vector<int>>& weights, int order);
// InhomogeneousGenerators if some generator is not homogeneous
MultigradedHilbert multigraded_hilbert(const Ideal& I, const std::vector<std::vector<int>>& weights, int order,
                                       const GroebnerOptions& opt = default_options());

// (tr B1^2, i tr B1B2, tr B2^2, e, f, g) with (e, f, g) the entries (1,2), (1,3), (2,3) of i*i
using ImageTuple = std::array<exactalg::Scalar, 6>;
ImageTuple phi(const forms::ADHMDatum& x);
// fixture moved by random Sp x O elements and a random SL(2) substitution of (B1, B2)
std::vector<ImageTuple> sample_orbit_image(const std::string& fixture, std::size_t n_samples, std::uint64_t seed);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars);
nlohmann::json to_json(const Ideal& I);
Ideal ideal_from_json(const nlohmann::json& j);

}  // namespace adhm::ideals

#endif
