#include "cartier.hpp"

#include <stdexcept>
#include <utility>

#include "errors.hpp"

namespace g4::cartier {

SemilinearOperator SemilinearOperator::identity(const gf::FieldSpec& f) {
    Matrix4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return SemilinearOperator(f, m);
}

std::array<uint32_t, 4> SemilinearOperator::apply(const std::array<uint32_t, 4>& coords) const {
    std::array<uint32_t, 4> out{};
    for (int i = 0; i < 4; ++i) {
        const uint32_t s = field_->sqrt(coords[i]);
        if (!s) continue;
        for (int j = 0; j < 4; ++j) out[j] ^= field_->mul(s, m_[i][j]);
    }
    return out;
}

bool SemilinearOperator::is_zero() const {
    for (const auto& row : m_)
        for (uint32_t v : row)
            if (v) return false;
    return true;
}

int matrix_rank(const gf::FieldSpec& f, Matrix4 m) {
    int rank = 0;
    for (int col = 0; col < 4 && rank < 4; ++col) {
        int piv = -1;
        for (int r = rank; r < 4; ++r)
            if (m[r][col]) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        const uint32_t inv = f.inv(m[rank][col]);
        for (int r = 0; r < 4; ++r) {
            if (r == rank || !m[r][col]) continue;
            const uint32_t s = f.mul(m[r][col], inv);
            for (int c = 0; c < 4; ++c) m[r][c] ^= f.mul(s, m[rank][c]);
        }
        ++rank;
    }
    return rank;
}

HasseWittMatrix hasse_witt_ns(const CoefficientGrid& g) {
    const auto& a = g.a;
    HasseWittMatrix hw{g.field, {}};
    hw.m = {{{a[1][1], a[3][1], a[1][3], a[3][3]},
             {a[0][1], a[2][1], a[0][3], a[2][3]},
             {a[1][0], a[3][0], a[1][2], a[3][2]},
             {a[0][0], a[2][0], a[0][2], a[2][2]}}};
    return hw;
}

SemilinearOperator cartier_from_hasse_witt(const HasseWittMatrix& hw) {
    Matrix4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = hw.field->sqrt(hw.m[i][j]);
    return SemilinearOperator(*hw.field, m);
}

HasseWittMatrix hasse_witt_from_cartier(const SemilinearOperator& op) {
    HasseWittMatrix hw{&op.field(), {}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) hw.m[i][j] = op.field().sqr(op.matrix()[i][j]);
    return hw;
}

SemilinearOperator cartier_hyperelliptic(const gf::PolyF2k& h, const gf::PolyF2k& f) {
    if (!h.field().same_as(f.field())) throw std::invalid_argument("mixed field specs in curve");
    if (h.is_zero() || h.degree() > 5 || f.degree() > 10)
        throw DomainError("not a genus-4 hyperelliptic model");
    const int dh = h.degree(), df = f.degree();
    const int top = std::max(2 * dh, df);
    if (top != 9 && top != 10) throw DomainError("not a genus-4 hyperelliptic model");
    const gf::FieldSpec& F = h.field();
    Matrix4 m{};
    for (int i = 0; i < 4; ++i) {
        // odd part of x^i * h gives B with x^i h = A^2 + x B^2
        for (int l = 0; l < 4; ++l) {
            const int e = 2 * l + 1 - i;
            if (e >= 0) m[i][l] = F.sqrt(h.coeff(static_cast<size_t>(e)));
        }
    }
    return SemilinearOperator(F, m);
}

SemilinearOperator semilinear_power(const SemilinearOperator& op, unsigned n) {
    if (n < 1) throw std::invalid_argument("power must be positive");
    Matrix4 m{};
    for (int i = 0; i < 4; ++i) {
        std::array<uint32_t, 4> v{};
        v[i] = 1;
        for (unsigned k = 0; k < n; ++k) v = op.apply(v);
        m[i] = v;
    }
    return SemilinearOperator(op.field(), m);
}

int a_number(const SemilinearOperator& op) { return 4 - matrix_rank(op.field(), op.matrix()); }

int two_rank(const SemilinearOperator& op) {
    const auto p = semilinear_power(op, 4);
    return matrix_rank(p.field(), p.matrix());
}

bool is_type43_candidate(const SemilinearOperator& op) {
    if (two_rank(op) != 0) throw DomainError("criterion only valid at p-rank 0");
    return matrix_rank(op.field(), op.matrix()) == 2 && semilinear_power(op, 2).is_zero();
}

}  // namespace g4::cartier
