#include "adhm/forms.hpp"

namespace adhm::fixtures {

using forms::ADHMDatum;
using forms::FramedSetting;

namespace {

Scalar half() { return Scalar::frac(1, 2); }
Matrix z2() { return Matrix(2, 2); }

// columns are the vectors of a basis written in standard coordinates
Matrix basis(std::vector<std::vector<Scalar>> cols) {
    std::vector<Matrix> m;
    for (auto& c : cols) m.push_back(Matrix::column(c));
    return Matrix::hstack(m);
}

Scalar i_() { return Scalar::I(); }

}  // namespace

FramedSetting setting_n3k4() { return FramedSetting::make(forms::Flavor::SOData, 3, 4); }

Matrix blk_I() { return Matrix::identity(2); }
Matrix blk_J() { return Matrix::from_rows({{0, -1}, {1, 0}}); }
Matrix blk_H() { return Matrix::from_rows({{1, 0}, {0, -1}}); }
Matrix blk_X() { return Matrix::from_rows({{0, 1}, {0, 0}}); }
Matrix blk_Y() { return Matrix::from_rows({{0, 0}, {1, 0}}); }

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return Matrix::vstack({Matrix::hstack({a, b}), Matrix::hstack({c, d})});
}

Matrix v(int n) {
    switch (n) {
        case 1: return block2(blk_I(), z2(), z2(), -blk_I()) * half();
        case 2: return block2(z2(), blk_H(), -blk_H(), z2());
        case 3: return block2(z2(), blk_X(), -blk_X(), z2());
        case 4: return block2(z2(), blk_Y(), -blk_Y(), z2());
        case 5: return block2(z2(), blk_I(), blk_I(), z2()) * half();
    }
    throw Error(ErrorCode::InvalidArgument, "v_n needs n in 1..5");
}

Matrix B1(Type t) { return t == Type::I ? v(5) : v(3); }

Matrix B2(Type t) { return t == Type::I ? v(1) - v(2) * half() : v(1) * i_() - v(5); }

// Framing maps. Type I: target basis (e1, e2-e4, e1+e3, e4), source basis
// (f1+i f2, (f1-i f2)/2, f3); the printed 1/sqrt(-2) normalisation is absorbed into this
// rescaled hyperbolic pair, giving the same map in standard coordinates.
// Types II-IV: target basis (e2, -(e1+i e3), e3, -i e2+e4), source basis
// (f1+i f3, f2, (f1-i f3)/2), an isometric rational replacement for the normalised pair.
Matrix i_map(Type t) {
    Scalar I = i_();
    if (t == Type::I) {
        Matrix e = basis({{1, 0, 0, 0}, {0, 1, 0, -1}, {1, 0, 1, 0}, {0, 0, 0, 1}});
        Matrix f = basis({{1, I, 0}, {half(), -I * half(), 0}, {0, 0, 1}});
        Matrix m = Matrix::from_rows({{0, 0, 0}, {0, I * half(), 0}, {-I, 0, 0}, {0, 0, 0}});
        return e * m * exactalg::inverse(f);
    }
    Matrix e = basis({{0, 1, 0, 0}, {-1, 0, -I, 0}, {0, 0, 1, 0}, {0, -I, 0, 1}});
    Matrix f = basis({{1, 0, I}, {0, 1, 0}, {half(), 0, -I * half()}});
    Matrix m;
    if (t == Type::II) m = Matrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}, {0, 0, 0}});
    if (t == Type::III) m = Matrix::from_rows({{0, 0, 0}, {0, -1, 0}, {1, 0, 0}, {0, 0, 0}});
    if (t == Type::IV) m = Matrix::from_rows({{0, 0, 0}, {0, -1, 0}, {0, 0, 0}, {0, 0, 0}});
    return e * m * exactalg::inverse(f);
}

ADHMDatum x(Type t) { return ADHMDatum::make(setting_n3k4(), B1(t), B2(t), i_map(t)); }

std::vector<Matrix> spx_basis() {
    Matrix X = blk_X(), Y = blk_Y();
    return {block2(X, X, X, X), block2(Y, -Y, -Y, Y)};
}

std::vector<std::pair<std::pair<int, int>, Matrix>> bracket_table() {
    Matrix I = blk_I(), H = blk_H(), X = blk_X(), Y = blk_Y(), Z = z2();
    return {
        {{1, 2}, block2(Z, H, H, Z)},
        {{1, 3}, block2(Z, X, X, Z)},
        {{1, 4}, block2(Z, Y, Y, Z)},
        {{1, 5}, block2(Z, I, -I, Z) * half()},
        {{2, 3}, block2(X, Z, Z, X) * Scalar(-2)},
        {{2, 4}, block2(Y, Z, Z, Y) * Scalar(2)},
        {{2, 5}, block2(H, Z, Z, -H)},
        {{3, 4}, -block2(H, Z, Z, H)},
        {{3, 5}, block2(X, Z, Z, -X)},
        {{4, 5}, block2(Y, Z, Z, -Y)},
    };
}

std::string type_name(Type t) {
    switch (t) {
        case Type::I: return "I";
        case Type::II: return "II";
        case Type::III: return "III";
        case Type::IV: return "IV";
    }
    return "?";
}

Type parse_type(const std::string& s) {
    if (s == "I") return Type::I;
    if (s == "II") return Type::II;
    if (s == "III") return Type::III;
    if (s == "IV") return Type::IV;
    throw Error(ErrorCode::InvalidArgument, "unknown fixture type '" + s + "'");
}

std::vector<std::string> names() {
    std::vector<std::string> out = {"v1", "v2", "v3", "v4", "v5", "spx"};
    for (auto t : {"I", "II", "III", "IV"}) {
        out.push_back(std::string("x_") + t);
        out.push_back(std::string("B1_") + t);
        out.push_back(std::string("B2_") + t);
        out.push_back(std::string("i_") + t);
    }
    return out;
}

nlohmann::json named(const std::string& name) {
    if (name.size() == 2 && name[0] == 'v' && name[1] >= '1' && name[1] <= '5')
        return exactalg::to_json(v(name[1] - '0'));
    if (name == "spx") {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& m : spx_basis()) arr.push_back(exactalg::to_json(m));
        return arr;
    }
    auto us = name.find('_');
    if (us != std::string::npos) {
        std::string head = name.substr(0, us);
        Type t = parse_type(name.substr(us + 1));
        if (head == "x") return forms::to_json(x(t));
        if (head == "B1") return exactalg::to_json(B1(t));
        if (head == "B2") return exactalg::to_json(B2(t));
        if (head == "i") return exactalg::to_json(i_map(t));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace adhm::fixtures
