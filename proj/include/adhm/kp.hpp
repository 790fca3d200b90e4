#ifndef ADHM_KP_HPP
#define ADHM_KP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adhm/forms.hpp"

namespace adhm::kp {

using exactalg::Matrix;
using forms::Flavor;

struct Partition {
    std::vector<std::size_t> parts;  // weakly decreasing, no zeros

    Partition() = default;
    // sorts and drops zeros
    explicit Partition(std::vector<std::size_t> p);
    std::size_t size() const;  // |eta|
    std::size_t length() const { return parts.size(); }
    std::string str() const;  // "(2,2)"
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

Partition transpose(const Partition& p);
// eta <= sigma in dominance order; SizeMismatch if |eta| != |sigma|
bool dominance_leq(const Partition& eta, const Partition& sigma);
bool is_valid_symplectic(const Partition& p);
bool is_valid_orthogonal(const Partition& p);
std::size_t dim_sp_orbit(const Partition& p);  // InvalidPartition
std::size_t dim_o_orbit(const Partition& p);
std::vector<Partition> partitions_of(std::size_t n);

struct Row {
    char start = 'a';  // 'a' or 'b'
    std::size_t len = 1;
    std::size_t count(char letter) const;
    std::string word() const;
    friend bool operator==(const Row& x, const Row& y) { return x.start == y.start && x.len == y.len; }
};

// Rows of alternating letters. 'a' letters are basis vectors of W, 'b' letters of V.
struct AbDiagram {
    std::vector<Row> rows;  // canonical order: length descending, a-start first

    AbDiagram() = default;
    explicit AbDiagram(std::vector<Row> r);
    std::size_t count(char letter) const;
    std::string text() const;  // one row per line
    static AbDiagram parse(const std::string& text);  // rows separated by newlines, commas or spaces
    friend bool operator==(const AbDiagram& x, const AbDiagram& y) { return x.rows == y.rows; }
};

nlohmann::json to_json(const AbDiagram& d);
AbDiagram diagram_from_json(const nlohmann::json& j);

std::size_t delta_ab(const AbDiagram& d);
// row types allowed for i in Hom(W,V) up to Sp x O; the letter on the symplectic
// side is 'b' for SOData and 'a' for SpData
bool is_valid_spo_diagram(const AbDiagram& d, Flavor f = Flavor::SOData);
// InvalidDiagram if not valid
std::size_t dim_spo_orbit(const AbDiagram& d, Flavor f = Flavor::SOData);
// Jordan type of the composite on the side of the remaining letter
Partition strip(const AbDiagram& d, char letter);

// rank of each alternating word, keyed by (start letter, number of maps)
using RankFingerprint = std::map<std::pair<char, std::size_t>, std::size_t>;

RankFingerprint fingerprint(const AbDiagram& d, std::size_t bound);
// i : W -> V and j : V -> W
RankFingerprint fingerprint(const Matrix& i, const Matrix& j, std::size_t bound);

struct Pair {
    Matrix i, j;
};
// a letter maps to the letter on its right
Pair canonical_pair(const AbDiagram& d);

// all valid diagrams with #a = na, #b = nb, in canonical order
std::vector<AbDiagram> enumerate_diagrams(std::size_t na, std::size_t nb, Flavor f = Flavor::SOData);

// NotNilpotent if i i* is not nilpotent, NoMatch if no valid diagram fits
AbDiagram abdiagram_of(const Matrix& i, const forms::FramedSetting& s);

// nullopt when the stratum is empty
std::optional<std::size_t> strata_dimension(std::size_t N, std::size_t k, std::size_t kprime, Flavor f);

}  // namespace adhm::kp

#endif
