#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace g4 {

using Int = __int128;

/** Overflow-checked arithmetic; throws std::overflow_error instead of wrapping. */
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, unsigned e);
/** Exact quotient; throws std::domain_error if b does not divide a. */
Int exact_div(Int a, Int b);

std::string int_to_string(Int v);
Int parse_int(std::string_view s);

/** Integer polynomial, coefficients lowest degree first, no trailing zeros. */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c) { return IntPoly({c}); }
    /** t - c */
    static IntPoly linear_root(Int c) { return IntPoly({-c, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Int leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(Int s) const;
    Int eval(Int x) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator<(const IntPoly& o) const;

    /** Comma-separated coefficients, constant term first. */
    std::string to_string() const;
    static IntPoly parse(std::string_view text);
    /** Human-readable form, highest degree first, e.g. "t^2 - 1". */
    std::string pretty(char var = 't') const;

private:
    void trim();
    std::vector<Int> c_;
};

inline IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

}  // namespace g4
