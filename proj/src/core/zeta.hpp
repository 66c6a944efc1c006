#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "intpoly.hpp"

namespace g4::zeta {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/**
 * Monic Weil q-polynomial P(t) of degree 2g. The L-polynomial is L(t) = t^{2g} P(1/t) = sum a_i t^i,
 * so a_i is the coefficient of t^{2g-i} in P.
 */
class WeilPolynomial {
public:
    /** Validates monicity, degree 2g and the functional equation a_{2g-i} = q^{g-i} a_i. */
    WeilPolynomial(IntPoly p, Int q);

    const IntPoly& poly() const { return p_; }
    Int q() const { return q_; }
    int genus() const { return p_.degree() / 2; }
    Int l_coeff(int i) const { return p_.coeff(static_cast<size_t>(p_.degree() - i)); }
    IntPoly l_polynomial() const;
    bool operator==(const WeilPolynomial& o) const { return q_ == o.q_ && p_ == o.p_; }

private:
    IntPoly p_;
    Int q_;
};

/** Newton's identities on s_n = q^n + 1 - N_n; requires exactly g = 4 counts. */
WeilPolynomial weil_from_counts(const std::vector<Int>& counts, Int q);

/** N_1..N_upto predicted by the polynomial (inverse Newton identities). */
std::vector<Int> predicted_counts(const WeilPolynomial& w, int upto);

struct NewtonPolygon {
    std::vector<Rational> slopes;  // ascending, 2g entries
};

NewtonPolygon newton_polygon(const WeilPolynomial& w);

enum class Stratum { OrdinaryOrOther, V0Only, N14, N13, S4 };

struct StratumLabel {
    Stratum stratum;
    int p_rank;
};

std::string to_string(Stratum s);
Stratum stratum_from_string(const std::string& s);

StratumLabel classify_stratum(const NewtonPolygon& np);

/** Polynomial whose roots are the n-th powers of the roots of w; q becomes q^n. */
WeilPolynomial base_extend(const WeilPolynomial& w, unsigned n);

/** Weil polynomial of a product; all factors share q and the degrees sum to 8. */
WeilPolynomial weil_product(const std::vector<WeilPolynomial>& ws);

bool is_supersingular(const WeilPolynomial& w);

}  // namespace g4::zeta
