#include "zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace g4::zeta {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

WeilPolynomial::WeilPolynomial(IntPoly p, Int q) : p_(std::move(p)), q_(q) {
    if (q < 2) throw DomainError("base field size must be at least 2");
    const int d = p_.degree();
    if (d < 2 || d % 2 != 0) throw DomainError("Weil polynomial must have positive even degree");
    if (p_.leading() != 1) throw DomainError("Weil polynomial must be monic");
    const int g = d / 2;
    for (int i = 0; i <= g; ++i)
        if (l_coeff(2 * g - i) != checked_mul(checked_pow(q_, static_cast<unsigned>(g - i)), l_coeff(i)))
            throw DomainError("functional equation fails at a_" + std::to_string(2 * g - i));
}

IntPoly WeilPolynomial::l_polynomial() const {
    std::vector<Int> c(p_.coeffs().rbegin(), p_.coeffs().rend());
    return IntPoly(std::move(c));
}

WeilPolynomial weil_from_counts(const std::vector<Int>& counts, Int q) {
    constexpr int g = 4;
    if (counts.size() != g)
        throw std::invalid_argument("expected exactly 4 point counts, got " + std::to_string(counts.size()));
    std::vector<Int> s(g + 1, 0), a(2 * g + 1, 0);
    for (int n = 1; n <= g; ++n) {
        if (counts[n - 1] < 0) throw DomainError("negative point count");
        const Int qn = checked_pow(q, n);
        s[n] = checked_sub(checked_add(qn, 1), counts[n - 1]);
        if (checked_mul(s[n], s[n]) > checked_mul(4 * g * g, qn))
            throw DomainError("not a genus-4 curve count sequence (Weil bound fails at n=" + std::to_string(n) + ")");
    }
    a[0] = 1;
    for (int k = 1; k <= g; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) acc = checked_add(acc, checked_mul(s[i], a[k - i]));
        if (acc % k != 0) throw DomainError("not a genus-4 curve count sequence (non-integral coefficient)");
        a[k] = -acc / k;
    }
    for (int i = 0; i < g; ++i) a[2 * g - i] = checked_mul(checked_pow(q, g - i), a[i]);
    std::vector<Int> p(a.rbegin(), a.rend());
    return WeilPolynomial(IntPoly(std::move(p)), q);
}

std::vector<Int> predicted_counts(const WeilPolynomial& w, int upto) {
    const int d = w.poly().degree();
    std::vector<Int> s(upto + 1, 0), out;
    for (int k = 1; k <= upto; ++k) {
        Int acc = k <= d ? checked_mul(k, w.l_coeff(k)) : Int(0);
        for (int i = 1; i < k; ++i)
            if (k - i <= d) acc = checked_add(acc, checked_mul(s[i], w.l_coeff(k - i)));
        s[k] = -acc;
        out.push_back(checked_sub(checked_add(checked_pow(w.q(), k), 1), s[k]));
    }
    return out;
}

namespace {

int log2_exact(Int q) {
    int r = 0;
    while (q > 1) {
        if (q % 2) throw DomainError("Newton polygon needs q a power of 2");
        q /= 2;
        ++r;
    }
    return r;
}

int val2(Int v) {
    int r = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++r;
    }
    return r;
}

}  // namespace

NewtonPolygon newton_polygon(const WeilPolynomial& w) {
    const int r = log2_exact(w.q());
    const int d = w.poly().degree();
    struct Pt {
        long long x;
        Rational y;
    };
    std::vector<Pt> pts;
    for (int i = 0; i <= d; ++i) {
        const Int a = w.l_coeff(i);
        if (a != 0) pts.push_back({i, Rational(val2(a), r)});
    }
    // Lower hull by monotone chain; points already sorted by x.
    std::vector<Pt> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const Pt& o = hull[hull.size() - 2];
            const Pt& m = hull.back();
            // drop m unless it lies strictly below segment o-p
            const Rational cross = Rational(m.x - o.x) * (p.y - o.y) - (m.y - o.y) * Rational(p.x - o.x);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    NewtonPolygon np;
    for (size_t i = 1; i < hull.size(); ++i) {
        const long long dx = hull[i].x - hull[i - 1].x;
        const Rational slope = (hull[i].y - hull[i - 1].y) / Rational(dx);
        for (long long j = 0; j < dx; ++j) np.slopes.push_back(slope);
    }
    return np;
}

std::string to_string(Stratum s) {
    switch (s) {
        case Stratum::S4: return "S4";
        case Stratum::N13: return "N13";
        case Stratum::N14: return "N14";
        case Stratum::V0Only: return "V0-only";
        case Stratum::OrdinaryOrOther: return "Ordinary-or-other";
    }
    return "?";
}

Stratum stratum_from_string(const std::string& s) {
    for (Stratum t : {Stratum::S4, Stratum::N13, Stratum::N14, Stratum::V0Only, Stratum::OrdinaryOrOther})
        if (to_string(t) == s) return t;
    throw ParseError("unknown stratum label '" + s + "'");
}

StratumLabel classify_stratum(const NewtonPolygon& np) {
    const auto& s = np.slopes;
    const int p_rank = static_cast<int>(std::count(s.begin(), s.end(), Rational(0)));
    auto is = [&](std::vector<Rational> expect) { return s == expect; };
    const Rational h(1, 2), t1(1, 3), t2(2, 3), q1(1, 4), q3(3, 4);
    if (s.size() == 8) {
        if (is({h, h, h, h, h, h, h, h})) return {Stratum::S4, 0};
        if (is({t1, t1, t1, h, h, t2, t2, t2})) return {Stratum::N13, 0};
        if (is({q1, q1, q1, q1, q3, q3, q3, q3})) return {Stratum::N14, 0};
    }
    return {p_rank == 0 ? Stratum::V0Only : Stratum::OrdinaryOrOther, p_rank};
}

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const size_t n = a.size();
    Matrix c(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return c;
}

// Faddeev-LeVerrier: characteristic polynomial det(tI - A), exact over the integers.
IntPoly charpoly(const Matrix& a) {
    const size_t n = a.size();
    std::vector<Int> c(n + 1, 0);
    c[n] = 1;
    Matrix m(n, std::vector<Int>(n, 0));
    for (size_t k = 1; k <= n; ++k) {
        Matrix am = mat_mul(a, m);
        for (size_t i = 0; i < n; ++i) am[i][i] = checked_add(am[i][i], c[n - k + 1]);
        m = std::move(am);
        Matrix am2 = mat_mul(a, m);
        Int tr = 0;
        for (size_t i = 0; i < n; ++i) tr = checked_add(tr, am2[i][i]);
        c[n - k] = -exact_div(tr, static_cast<Int>(k));
    }
    return IntPoly(std::move(c));
}

}  // namespace

WeilPolynomial base_extend(const WeilPolynomial& w, unsigned n) {
    if (n < 1) throw std::invalid_argument("base extension degree must be positive");
    if (n == 1) return w;
    const size_t d = static_cast<size_t>(w.poly().degree());
    // Companion matrix of the monic polynomial; its n-th power has eigenvalues alpha^n.
    Matrix comp(d, std::vector<Int>(d, 0));
    for (size_t i = 1; i < d; ++i) comp[i][i - 1] = 1;
    for (size_t i = 0; i < d; ++i) comp[i][d - 1] = -w.poly().coeff(i);
    Matrix pw = comp;
    for (unsigned i = 1; i < n; ++i) pw = mat_mul(pw, comp);
    return WeilPolynomial(charpoly(pw), checked_pow(w.q(), n));
}

WeilPolynomial weil_product(const std::vector<WeilPolynomial>& ws) {
    if (ws.empty()) throw std::invalid_argument("empty product");
    IntPoly p = IntPoly::constant(1);
    for (const auto& w : ws) {
        if (w.q() != ws.front().q()) throw DomainError("mixed base fields in Weil product");
        p = p * w.poly();
    }
    if (p.degree() != 8) throw DomainError("factor degrees must sum to 8");
    return WeilPolynomial(p, ws.front().q());
}

bool is_supersingular(const WeilPolynomial& w) {
    const auto np = newton_polygon(w);
    return std::all_of(np.slopes.begin(), np.slopes.end(), [](const Rational& r) { return r == Rational(1, 2); });
}

}  // namespace g4::zeta
