#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gf2k.hpp"
#include "poly.hpp"

namespace g4::cartier {

using Matrix4 = std::array<std::array<uint32_t, 4>, 4>;

/** a[i][j] = coefficient of x^i y^j of an affine equation, over a given field. */
struct CoefficientGrid {
    const gf::FieldSpec* field;
    Matrix4 a{};
};

/** Cartier operator on a basis w_1..w_4: C(w_i) = sum_j m[i][j] w_j, extended 1/2-semilinearly. */
class SemilinearOperator {
public:
    SemilinearOperator(const gf::FieldSpec& f, const Matrix4& m) : field_(&f), m_(m) {}
    static SemilinearOperator identity(const gf::FieldSpec& f);

    const gf::FieldSpec& field() const { return *field_; }
    const Matrix4& matrix() const { return m_; }
    /** C(sum c_i w_i) = sum_i sqrt(c_i) * row_i. */
    std::array<uint32_t, 4> apply(const std::array<uint32_t, 4>& coords) const;
    bool is_zero() const;
    bool operator==(const SemilinearOperator& o) const { return field_->same_as(*o.field_) && m_ == o.m_; }

private:
    const gf::FieldSpec* field_;
    Matrix4 m_;
};

struct HasseWittMatrix {
    const gf::FieldSpec* field;
    Matrix4 m{};
};

/** Rank over the coefficient field. */
int matrix_rank(const gf::FieldSpec& f, Matrix4 m);

HasseWittMatrix hasse_witt_ns(const CoefficientGrid& grid);
SemilinearOperator cartier_from_hasse_witt(const HasseWittMatrix& hw);
HasseWittMatrix hasse_witt_from_cartier(const SemilinearOperator& op);

/** Basis w_i = x^{i-1} dx / h of the curve y^2 + h y = f; f does not enter. */
SemilinearOperator cartier_hyperelliptic(const gf::PolyF2k& h, const gf::PolyF2k& f);

SemilinearOperator semilinear_power(const SemilinearOperator& op, unsigned n);
int a_number(const SemilinearOperator& op);
int two_rank(const SemilinearOperator& op);
/** rank 2 and C^2 = 0; only meaningful at 2-rank 0. */
bool is_type43_candidate(const SemilinearOperator& op);

}  // namespace g4::cartier
