#ifndef ADHM_PARTITION_HPP
#define ADHM_PARTITION_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "adhm/forms.hpp"

namespace adhm::partition {

// A character sign * q1^{dq1/2} q2^{dq2/2} z^z t^t. Internally weights are those of the
// vectors of N (positive q-degree); coordinate functions carry the inverse weights and the
// JSON output is written in that (negated) convention.
struct HalfWeight {
    int dq1 = 0, dq2 = 0;
    std::vector<int> z, t;
    int sign = 1;

    int qdeg() const { return dq1 + dq2; }
    bool operator==(const HalfWeight& o) const = default;
};

struct RationalCharacter {
    std::size_t rz = 0, rt = 0;
    std::vector<HalfWeight> numerator;    // factors (1 - w), from E
    std::vector<HalfWeight> denominator;  // factors 1/(1 - w), from N
};

// key layout: dq1, dq2, z_1..z_rz, t_1..t_rt
using Key = std::vector<int>;

struct TruncatedSeries {
    int order = 0;  // doubled total q-degree cutoff
    std::size_t rz = 0, rt = 0;
    std::map<Key, long long> terms;

    long long coeff(const Key& k) const;
    // z, t -> 1
    std::map<std::pair<int, int>, long long> specialize() const;
    TruncatedSeries truncate(int dorder) const;
    bool has_z() const;
    nlohmann::json to_json() const;
};

struct Setting {
    forms::Flavor flavor = forms::Flavor::SpData;
    std::size_t N = 0, k = 0;

    int epsilon_V() const { return flavor == forms::Flavor::SpData ? 1 : -1; }
    std::size_t rz() const { return k / 2; }
    std::size_t rt() const { return N / 2; }
};

// weights of the standard torus on V: z_a, z_a^-1 per pair, 0 for an odd tail
std::vector<HalfWeight> torus_V(const Setting& s);

// V-eigenvalues default to the torus ones; twisted components of O(k) pass their own
std::vector<HalfWeight> weights_of_N(const Setting& s);
std::vector<HalfWeight> weights_of_N(const Setting& s, const std::vector<HalfWeight>& v_eigen);
std::vector<HalfWeight> weights_of_E(const Setting& s);
std::vector<HalfWeight> weights_of_E(const Setting& s, const std::vector<HalfWeight>& v_eigen);
RationalCharacter koszul_character(const Setting& s);
RationalCharacter koszul_character(const Setting& s, const std::vector<HalfWeight>& v_eigen);
RationalCharacter ambient_character(const Setting& s);  // E dropped

// order is the total q-degree (undoubled)
TruncatedSeries expand(const RationalCharacter& rc, int order);

enum class Group { Trivial, O1, O2, O3, Sp1, Sp2 };
std::string group_name(Group g);

struct WeylComponent {
    std::vector<HalfWeight> v_eigen;      // substitution for the V-eigenvalues
    std::vector<std::vector<int>> roots;  // Weyl measure prod (1 - z^alpha)
    long weyl_order = 1;
    mpq_class weight;
};

struct WeylData {
    Group group = Group::Trivial;
    std::vector<WeylComponent> components;
};

Group group_for(const Setting& s);  // UnsupportedGroup outside the table
WeylData weyl_data(const Setting& s);

// Weyl integration over each component, averaged; the result has no z variables.
// with_E = false drops the Lie G(V) factor (invariants of C[N]).
TruncatedSeries invariant_part(const Setting& s, const WeylData& wd, int order, bool with_E = true);

// Independent counts by explicit linear algebra on z-weight-0 elements of the given
// multidegree (dq1, dq2, t_1..t_rt): the common kernel of the Lie algebra derivations and of
// (sigma - 1) for the disconnected-part generator. TooLarge past max_monomials.
// Invariants of C[N] itself:
std::size_t brute_force_invariant_dim(const Setting& s, const Key& multidegree, std::size_t max_monomials = 20000);
// Euler characteristic sum_i (-1)^i dim (wedge^i Lie G(V) (x) C[N])^G, the same quantity the
// Weyl integration of the Koszul class produces:
long long brute_force_koszul_invariant(const Setting& s, const Key& multidegree, std::size_t max_monomials = 20000);

struct NekrasovTerm {
    std::size_t k = 0;
    mpq_class instanton_number;
    TruncatedSeries series;
};

// k runs over 0..k_max (even k only for SO-data)
std::vector<NekrasovTerm> nekrasov_Z(forms::Flavor flavor, std::size_t N, std::size_t k_max, int order);
mpq_class instanton_number(forms::Flavor flavor, std::size_t N, std::size_t k);

nlohmann::json to_json(const std::vector<NekrasovTerm>& terms, forms::Flavor flavor, std::size_t N);

}  // namespace adhm::partition

#endif
