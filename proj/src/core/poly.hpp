#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gf2k.hpp"

namespace g4::gf {

/** Univariate polynomial over F_{2^k}, coefficients lowest degree first, no trailing zeros. */
class PolyF2k {
public:
    explicit PolyF2k(const FieldSpec& f) : field_(&f) {}
    PolyF2k(const FieldSpec& f, std::vector<uint32_t> coeffs);
    static PolyF2k from_elements(const std::vector<FieldElement>& coeffs);
    static PolyF2k monomial(const FieldSpec& f, uint32_t c, unsigned deg);
    /** Polynomial over F2 given as a bitmask (bit i = coefficient of x^i), read in field f. */
    static PolyF2k from_mask(const FieldSpec& f, uint64_t mask);

    const FieldSpec& field() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coefficient(size_t i) const { return FieldElement(*field_, coeff(i)); }
    uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& raw() const { return c_; }

    PolyF2k operator+(const PolyF2k& o) const;
    PolyF2k operator-(const PolyF2k& o) const { return *this + o; }
    PolyF2k operator*(const PolyF2k& o) const;
    PolyF2k operator/(const PolyF2k& o) const { return divmod(*this, o).first; }
    PolyF2k operator%(const PolyF2k& o) const;
    bool operator==(const PolyF2k& o) const { return field_->same_as(*o.field_) && c_ == o.c_; }

    PolyF2k scaled(uint32_t s) const;
    PolyF2k monic() const;
    PolyF2k derivative() const;
    /** Square root of a polynomial whose odd coefficients vanish. */
    PolyF2k sqrt() const;
    uint32_t eval(uint32_t x) const;
    /** Image under a field embedding of the coefficients. */
    PolyF2k embedded(const Embedding& e) const;

    friend std::pair<PolyF2k, PolyF2k> divmod(const PolyF2k& a, const PolyF2k& b);

    std::string to_string(char var = 'x') const;

private:
    void check_same(const PolyF2k& o) const;
    void trim();
    const FieldSpec* field_;
    std::vector<uint32_t> c_;
};

/** Monic gcd (zero if both are zero). */
PolyF2k gcd(const PolyF2k& a, const PolyF2k& b);

/** a^2 mod m. */
PolyF2k square_mod(const PolyF2k& a, const PolyF2k& m);

/** Res(a, b); zero iff a, b share a root over the algebraic closure. Res(0, c) = 1 for a nonzero constant c. */
FieldElement poly_resultant(const PolyF2k& a, const PolyF2k& b);

/** Monic irreducible factors with multiplicities, sorted by (degree, coefficients). */
std::vector<std::pair<PolyF2k, int>> factor(const PolyF2k& f);

/** Distinct roots of f lying in its own coefficient field. */
std::vector<uint32_t> roots_in_field(const PolyF2k& f);

}  // namespace g4::gf
