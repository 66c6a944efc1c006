// Point counting and smoothness for curve models.
#include <algorithm>
#include <cstdio>

#include "curves.hpp"
#include "errors.hpp"

namespace g4::curves {

using gf::FieldSpec;
using gf::PolyF2k;

namespace {

const FieldSpec& extension_for(const FieldSpec& base, unsigned n) {
    if (n < 1) throw std::invalid_argument("extension degree must be positive");
    const unsigned m = base.degree() * n;
    if (m > gf::kMaxDegree) throw DomainError("F_" + std::to_string(base.size()) + "^" + std::to_string(n) + " exceeds F_2^16");
    return FieldSpec::standard(m);
}

Cubic embed_cubic(const Cubic& q, const gf::Embedding& e) {
    Cubic r{};
    for (int i = 0; i < 20; ++i) r[i] = e.apply(q[i]);
    return r;
}

uint32_t power(const FieldSpec& F, uint32_t x, int e) {
    uint32_t r = 1;
    for (int i = 0; i < e; ++i) r = F.mul(r, x);
    return r;
}

uint32_t eval_cubic(const FieldSpec& F, const Cubic& q, const std::array<uint32_t, 4>& p) {
    const auto& mons = cubic_monomials();
    uint32_t v = 0;
    for (int i = 0; i < 20; ++i) {
        if (!q[i]) continue;
        uint32_t t = q[i];
        for (int j = 0; j < 4 && t; ++j) t = F.mul(t, power(F, p[j], mons[i][j]));
        v ^= t;
    }
    return v;
}

// d q / d(var) at p; in characteristic 2 only odd exponents survive
uint32_t eval_partial(const FieldSpec& F, const Cubic& q, int var, const std::array<uint32_t, 4>& p) {
    const auto& mons = cubic_monomials();
    uint32_t v = 0;
    for (int i = 0; i < 20; ++i) {
        if (!q[i] || !(mons[i][var] & 1)) continue;
        uint32_t t = q[i];
        for (int j = 0; j < 4 && t; ++j) t = F.mul(t, power(F, p[j], mons[i][j] - (j == var)));
        v ^= t;
    }
    return v;
}

uint32_t eval_quadric(QuadricKind kind, const FieldSpec& F, const std::array<uint32_t, 4>& p) {
    return F.mul(p[0], p[1]) ^ (kind == QuadricKind::NonSingular ? F.mul(p[2], p[3]) : F.sqr(p[3]));
}

std::array<uint32_t, 4> quadric_gradient(QuadricKind kind, const std::array<uint32_t, 4>& p) {
    if (kind == QuadricKind::NonSingular) return {p[1], p[0], p[3], p[2]};
    return {p[1], p[0], 0, 0};
}

// number of distinct roots in F of a polynomial of degree >= 1
unsigned distinct_roots(const PolyF2k& c) {
    const FieldSpec& F = c.field();
    // z^{|F|} mod c by repeated squaring
    PolyF2k z = PolyF2k::monomial(F, 1, 1);
    PolyF2k acc = z % c;
    for (unsigned i = 0; i < F.degree(); ++i) acc = gf::square_mod(acc, c);
    return static_cast<unsigned>(gf::gcd(c, acc + z % c).degree());
}

uint64_t count_quadric(const QuadricCubicCurve& curve, unsigned n) {
    const FieldSpec& F = extension_for(curve.field(), n);
    const auto& e = gf::standard_embedding(curve.field().degree(), F.degree());
    const Cubic q = embed_cubic(curve.cubic(), e);
    const auto& mons = cubic_monomials();
    const uint64_t Q = F.size();
    uint64_t total = 0;
    // P^1(F): (1 : v) for v in F, then (0 : 1)
    auto for_p1 = [&](auto&& fn) {
        for (uint32_t v = 0; v < F.size(); ++v) fn(1u, v);
        fn(0u, 1u);
    };
    if (curve.kind() == QuadricKind::NonSingular) {
        // Segre: (X,Y,Z,T) = (xz, yt, yz, xt); X^a Y^b Z^c T^d = x^{a+d} y^{b+c} z^{a+c} t^{b+d}
        for_p1([&](uint32_t x, uint32_t y) {
            std::vector<uint32_t> c(4, 0);
            for (int i = 0; i < 20; ++i) {
                if (!q[i]) continue;
                const auto& m = mons[i];
                c[m[0] + m[2]] ^= F.mul(q[i], F.mul(power(F, x, m[0] + m[3]), power(F, y, m[1] + m[2])));
            }
            const PolyF2k cz(F, c);
            if (cz.is_zero()) {
                total += Q + 1;
                return;
            }
            if (cz.degree() >= 1) total += distinct_roots(cz);
            if (c[3] == 0) total += 1;  // (z : t) = (1 : 0)
        });
    } else {
        // lines through the vertex: (s^2 : u^2 : z : su), z in F, plus the vertex itself
        for_p1([&](uint32_t s, uint32_t u) {
            const std::array<uint32_t, 4> base{F.sqr(s), F.sqr(u), 0, F.mul(s, u)};
            std::vector<uint32_t> c(4, 0);
            for (int i = 0; i < 20; ++i) {
                if (!q[i]) continue;
                const auto& m = mons[i];
                uint32_t t = q[i];
                for (int j : {0, 1, 3}) t = F.mul(t, power(F, base[j], m[j]));
                c[m[2]] ^= t;
            }
            const PolyF2k cz(F, c);
            if (cz.is_zero()) total += Q;
            else if (cz.degree() >= 1) total += distinct_roots(cz);
        });
        if (q[monomial_index(0, 0, 3, 0)] == 0) total += 1;
    }
    return total;
}

uint64_t count_hyperelliptic(const HyperellipticCurve& c, unsigned n) {
    const FieldSpec& F = extension_for(c.field(), n);
    const auto& e = gf::standard_embedding(c.field().degree(), F.degree());
    const PolyF2k h = c.h().embedded(e), f = c.f().embedded(e);
    uint64_t total = 0;
    for (uint32_t x = 0; x < F.size(); ++x) {
        const uint32_t hx = h.eval(x);
        if (!hx) total += 1;
        else if (F.trace(F.div(f.eval(x), F.sqr(hx))) == 0) total += 2;
    }
    const uint32_t h5 = h.coeff(5), f10 = f.coeff(10);
    if (!h5) total += 1;
    else if (F.trace(F.div(f10, F.sqr(h5))) == 0) total += 2;
    return total;
}

}  // namespace

uint64_t count_points(const CurveModel& c, unsigned n) {
    if (const auto* h = std::get_if<HyperellipticCurve>(&c)) return count_hyperelliptic(*h, n);
    return count_quadric(std::get<QuadricCubicCurve>(c), n);
}

std::vector<uint64_t> count_points_upto(const CurveModel& c, unsigned n_max) {
    std::vector<uint64_t> out;
    for (unsigned n = 1; n <= n_max; ++n) out.push_back(count_points(c, n));
    return out;
}

uint64_t count_points_p3(const QuadricCubicCurve& c, unsigned n) {
    const FieldSpec& F = extension_for(c.field(), n);
    const auto& e = gf::standard_embedding(c.field().degree(), F.degree());
    const Cubic q = embed_cubic(c.cubic(), e);
    uint64_t total = 0;
    const uint32_t N = F.size();
    // normalized representatives: first nonzero coordinate equal to 1
    for (int lead = 0; lead < 4; ++lead) {
        const int free = 3 - lead;
        uint64_t combos = 1;
        for (int i = 0; i < free; ++i) combos *= N;
        for (uint64_t idx = 0; idx < combos; ++idx) {
            std::array<uint32_t, 4> p{};
            p[lead] = 1;
            uint64_t r = idx;
            for (int j = lead + 1; j < 4; ++j) {
                p[j] = static_cast<uint32_t>(r % N);
                r /= N;
            }
            if (eval_quadric(c.kind(), F, p) == 0 && eval_cubic(F, q, p) == 0) ++total;
        }
    }
    return total;
}

std::string SingularPoint::to_string() const {
    std::string s = chart + "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "0x%x", coords[i]);
        s += (i ? (chart == "P3" ? ":" : ",") : "") + std::string(buf);
    }
    return s + ")@" + field->tag();
}

bool is_singular_at(const QuadricCubicCurve& c, const FieldSpec& ext, const std::array<uint32_t, 4>& p) {
    if (ext.degree() % c.field().degree()) throw std::invalid_argument("point field does not contain the curve field");
    const auto& e = gf::standard_embedding(c.field().degree(), ext.degree());
    const Cubic q = embed_cubic(c.cubic(), e);
    if (p == std::array<uint32_t, 4>{}) throw std::invalid_argument("zero vector is not a projective point");
    if (eval_quadric(c.kind(), ext, p) || eval_cubic(ext, q, p)) return false;
    const auto gq = quadric_gradient(c.kind(), p);
    std::array<uint32_t, 4> gc;
    for (int v = 0; v < 4; ++v) gc[v] = eval_partial(ext, q, v, p);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ext.mul(gq[i], gc[j]) ^ ext.mul(gq[j], gc[i])) return false;
    return true;
}

bool is_singular_at(const HyperellipticCurve& c, const SingularPoint& p) {
    const FieldSpec& F = *p.field;
    const auto& e = gf::standard_embedding(c.field().degree(), F.degree());
    const PolyF2k h = c.h().embedded(e), f = c.f().embedded(e);
    if (p.chart == "affine") {
        const uint32_t x = p.coords.at(0), y = p.coords.at(1);
        const uint32_t eq = F.sqr(y) ^ F.mul(h.eval(x), y) ^ f.eval(x);
        const uint32_t dy = h.eval(x);
        const uint32_t dx = F.mul(h.derivative().eval(x), y) ^ f.derivative().eval(x);
        return !eq && !dy && !dx;
    }
    if (p.chart == "infinity") {
        const uint32_t v = p.coords.at(0);
        const uint32_t eq = F.sqr(v) ^ F.mul(h.coeff(5), v) ^ f.coeff(10);
        const uint32_t dv = h.coeff(5);
        const uint32_t du = F.mul(h.coeff(4), v) ^ f.coeff(9);
        return !eq && !dv && !du;
    }
    throw std::invalid_argument("unknown chart '" + p.chart + "'");
}

// ---------------------------------------------------------------- smoothness

namespace {

// Bivariate polynomial: entry j is the coefficient of y^j, a polynomial in x.
using BiPoly = std::vector<PolyF2k>;

void trim(BiPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

BiPoly d_dx(const BiPoly& f) {
    BiPoly r;
    for (const auto& c : f) r.push_back(c.derivative());
    trim(r);
    return r;
}

BiPoly d_dy(const BiPoly& f) {
    BiPoly r;
    for (size_t j = 1; j < f.size(); ++j) r.push_back(j & 1 ? f[j] : PolyF2k(f[j].field()));
    trim(r);
    return r;
}

// Res_y(a, b) over K[x] as the Sylvester determinant, by fraction-free elimination.
PolyF2k resultant_y(const BiPoly& a, const BiPoly& b) {
    const FieldSpec& K = a.front().field();
    const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (n == 0) {
        PolyF2k r = PolyF2k::monomial(K, 1, 0);
        for (int i = 0; i < m; ++i) r = r * b[0];
        return r;
    }
    const int N = m + n;
    std::vector<std::vector<PolyF2k>> M(N, std::vector<PolyF2k>(N, PolyF2k(K)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = a[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = b[n - j];
    PolyF2k prev = PolyF2k::monomial(K, 1, 0);
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return PolyF2k(K);
            std::swap(M[k], M[piv]);
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) M[i][j] = (M[i][j] * M[k][k] + M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return M[N - 1][N - 1];
}

// Arithmetic in L = K[x]/(P), P irreducible.
struct Residue {
    const PolyF2k& P;

    PolyF2k reduce(const PolyF2k& a) const { return a % P; }
    PolyF2k mul(const PolyF2k& a, const PolyF2k& b) const { return (a * b) % P; }
    PolyF2k inv(const PolyF2k& a) const {
        // extended Euclid: s a = 1 mod P
        PolyF2k r0 = P, r1 = a % P, s0(P.field()), s1 = PolyF2k::monomial(P.field(), 1, 0);
        while (!r1.is_zero()) {
            auto [qt, rem] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            PolyF2k s2 = s0 + qt * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw std::logic_error("non-invertible residue modulo an irreducible");
        return (s0.scaled(P.field().inv(r0.leading()))) % P;
    }
};

using LPoly = std::vector<PolyF2k>;  // coefficients in L, lowest y-degree first

void trim(LPoly& f, int) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

LPoly specialize(const BiPoly& f, const Residue& L) {
    LPoly r;
    for (const auto& c : f) r.push_back(L.reduce(c));
    trim(r, 0);
    return r;
}

LPoly lpoly_mod(LPoly a, const LPoly& b, const Residue& L) {
    const int db = static_cast<int>(b.size()) - 1;
    const PolyF2k inv_lead = L.inv(b.back());
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const PolyF2k s = L.mul(a.back(), inv_lead);
        const int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = a[shift + j] + L.mul(s, b[j]);
        trim(a, 0);
    }
    return a;
}

LPoly lpoly_gcd(LPoly a, LPoly b, const Residue& L) {
    while (!b.empty()) {
        LPoly r = lpoly_mod(a, b, L);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x-coordinates (as irreducible factors) carrying a singular point of the affine curve f = 0.
// Returns {singular?, factor for the witness (if any)}.
struct ChartVerdict {
    bool singular = false;
    std::optional<PolyF2k> factor;  // x-coordinate's minimal polynomial; empty for "all of x"
};

bool fiber_singular(const BiPoly& f, const BiPoly& fx, const BiPoly& fy, const PolyF2k& P) {
    const Residue L{P};
    LPoly g = lpoly_gcd(lpoly_gcd(specialize(f, L), specialize(fx, L), L), specialize(fy, L), L);
    return g.empty() || g.size() >= 2;
}

ChartVerdict chart_singular(BiPoly f) {
    trim(f);
    ChartVerdict v;
    if (f.empty()) {
        v.singular = true;
        return v;
    }
    const BiPoly fx = d_dx(f), fy = d_dy(f);
    if (f.size() == 1) {
        const PolyF2k& f0 = f[0];
        if (f0.degree() <= 0) return v;  // nonzero constant: empty chart
        const PolyF2k g = gf::gcd(f0, f0.derivative());
        if (g.degree() >= 1) {
            v.singular = true;
            v.factor = gf::factor(g).front().first;
        } else if (g.is_zero()) {
            v.singular = true;
        }
        return v;
    }
    if (fx.empty() && fy.empty()) {
        v.singular = true;
        return v;
    }
    std::vector<PolyF2k> res;
    if (!fx.empty()) res.push_back(resultant_y(f, fx));
    if (!fy.empty()) res.push_back(resultant_y(f, fy));
    for (const auto& r : res)
        if (r.is_zero()) {
            v.singular = true;
            return v;
        }
    PolyF2k E = res[0];
    for (size_t i = 1; i < res.size(); ++i) E = gf::gcd(E, res[i]);
    if (E.degree() < 1) return v;
    for (const auto& [P, mult] : gf::factor(E))
        if (fiber_singular(f, fx, fy, P)) {
            v.singular = true;
            v.factor = P;
            return v;
        }
    return v;
}

// A point (x0, y0) over some F_{2^m} with m <= 16 realizing a singular point in the chart, if one is found.
std::optional<std::tuple<const FieldSpec*, uint32_t, uint32_t>> chart_witness(const BiPoly& f, const PolyF2k& P) {
    const FieldSpec& K = P.field();
    const BiPoly fx = d_dx(f), fy = d_dy(f);
    for (unsigned m = K.degree() * static_cast<unsigned>(P.degree()); m <= gf::kMaxDegree;
         m += K.degree() * static_cast<unsigned>(P.degree())) {
        const auto& e = gf::standard_embedding(K.degree(), m);
        const FieldSpec& F = e.to();
        for (uint32_t x0 : gf::roots_in_field(P.embedded(e))) {
            auto at = [&](const BiPoly& b) {
                std::vector<uint32_t> c;
                for (const auto& p : b) c.push_back(p.embedded(e).eval(x0));
                return PolyF2k(F, c);
            };
            const PolyF2k g = gf::gcd(gf::gcd(at(f), at(fx)), at(fy));
            if (g.is_zero()) return std::make_tuple(&F, x0, 0u);
            const auto roots = gf::roots_in_field(g);
            if (!roots.empty()) return std::make_tuple(&F, x0, roots.front());
        }
    }
    return std::nullopt;
}

// Boundary line data: the curve near the line is g0(w) + g1(w) s + O(s^2), s the transverse coordinate.
std::optional<PolyF2k> line_singular(const PolyF2k& g0, const PolyF2k& g1) {
    const PolyF2k g = gf::gcd(gf::gcd(g0, g1), g0.derivative());
    if (g.is_zero()) return PolyF2k::monomial(g0.field(), 1, 1);  // every point; report w = 0
    if (g.degree() >= 1) return g;
    return std::nullopt;
}

std::optional<std::pair<const FieldSpec*, uint32_t>> root_somewhere(const PolyF2k& g) {
    const FieldSpec& K = g.field();
    const auto factors = gf::factor(g);
    const PolyF2k& P = factors.front().first;
    const unsigned m = K.degree() * static_cast<unsigned>(P.degree());
    if (m > gf::kMaxDegree) return std::nullopt;
    const auto& e = gf::standard_embedding(K.degree(), m);
    const auto roots = gf::roots_in_field(P.embedded(e));
    return std::make_pair(&e.to(), roots.front());
}

SmoothnessResult singular(bool want, std::optional<SingularPoint> w) {
    SmoothnessResult r{false, std::nullopt};
    if (want) r.witness = std::move(w);
    return r;
}

SmoothnessResult smooth_ns(const QuadricCubicCurve& c, bool want) {
    const FieldSpec& K = c.field();
    const auto grid = affine_model_ns(c);
    const auto& a = grid.a;
    auto p3 = [&](const FieldSpec* F, std::array<uint32_t, 4> p) { return SingularPoint{F, "P3", {p.begin(), p.end()}}; };

    // corner (0:0:1:0)
    if (!a[3][3] && !a[2][3] && !a[3][2]) return singular(want, p3(&K, {0, 0, 1, 0}));

    // chart t != 0, x != 0: f(X, Y) = sum a_ij X^i Y^j at (X : Y : XY : 1)
    BiPoly f;
    for (int j = 0; j < 4; ++j) {
        std::vector<uint32_t> col;
        for (int i = 0; i < 4; ++i) col.push_back(a[i][j]);
        f.emplace_back(K, col);
    }
    const ChartVerdict v = chart_singular(f);
    if (v.singular) {
        std::optional<SingularPoint> w;
        if (want && v.factor)
            if (auto pt = chart_witness(f, *v.factor)) {
                const auto [F, x0, y0] = *pt;
                w = p3(F, {x0, y0, F->mul(x0, y0), 1});
            }
        return singular(want, w);
    }

    // line t = 0 away from the corner: points (1 : 0 : y : 0)
    std::vector<uint32_t> g0, g1, h0, h1;
    for (int j = 0; j < 4; ++j) g0.push_back(a[3][j]), g1.push_back(a[2][j]);
    for (int i = 0; i < 4; ++i) h0.push_back(a[i][3]), h1.push_back(a[i][2]);
    if (auto g = line_singular(PolyF2k(K, g0), PolyF2k(K, g1))) {
        std::optional<SingularPoint> w;
        if (want)
            if (auto r = root_somewhere(*g)) w = p3(r->first, {1, 0, r->second, 0});
        return singular(want, w);
    }
    // line x = 0 away from the corner: points (0 : 1 : z : 0)
    if (auto g = line_singular(PolyF2k(K, h0), PolyF2k(K, h1))) {
        std::optional<SingularPoint> w;
        if (want)
            if (auto r = root_somewhere(*g)) w = p3(r->first, {0, 1, r->second, 0});
        return singular(want, w);
    }
    return {true, std::nullopt};
}

SmoothnessResult smooth_cone(const QuadricCubicCurve& c, bool want) {
    const FieldSpec& K = c.field();
    const auto& mons = cubic_monomials();
    auto p3 = [&](const FieldSpec* F, std::array<uint32_t, 4> p) { return SingularPoint{F, "P3", {p.begin(), p.end()}}; };

    // the vertex lies on the curve iff Z^3 is absent, and every curve through it is singular there
    if (!c.coeff(monomial_index(0, 0, 3, 0))) return singular(want, p3(&K, {0, 0, 1, 0}));

    // chart Y = 1: (s^2 : 1 : z : s), X^a Y^b Z^c T^d -> s^{2a+d} z^c
    BiPoly f(4, PolyF2k(K));
    for (int i = 0; i < 20; ++i) {
        if (!c.coeff(i)) continue;
        const auto& m = mons[i];
        f[m[2]] = f[m[2]] + PolyF2k::monomial(K, c.coeff(i), 2 * m[0] + m[3]);
    }
    const ChartVerdict v = chart_singular(f);
    if (v.singular) {
        std::optional<SingularPoint> w;
        if (want && v.factor)
            if (auto pt = chart_witness(f, *v.factor)) {
                const auto [F, s0, z0] = *pt;
                w = p3(F, {F->sqr(s0), 1, z0, s0});
            }
        return singular(want, w);
    }

    // line Y = T = 0 away from the vertex: chart X = 1, (1 : w^2 : z : w); g0 = q(1,0,z,0), g1 = d/dw at w = 0
    std::vector<uint32_t> g0(4, 0), g1(4, 0);
    for (int i = 0; i < 20; ++i) {
        const auto& m = mons[i];
        if (m[1] == 0 && m[3] == 0) g0[m[2]] ^= c.coeff(i);
        if (m[1] == 0 && m[3] == 1) g1[m[2]] ^= c.coeff(i);
    }
    if (auto g = line_singular(PolyF2k(K, g0), PolyF2k(K, g1))) {
        std::optional<SingularPoint> w;
        if (want)
            if (auto r = root_somewhere(*g)) w = p3(r->first, {1, 0, r->second, 0});
        return singular(want, w);
    }
    return {true, std::nullopt};
}

SmoothnessResult smooth_hyp(const HyperellipticCurve& c, bool want) {
    const FieldSpec& K = c.field();
    const PolyF2k& h = c.h();
    const PolyF2k& f = c.f();
    // affine: h(x0) = 0 and h'(x0)^2 f(x0) + f'(x0)^2 = 0
    const PolyF2k hp = h.derivative(), fp = f.derivative();
    const PolyF2k g = gf::gcd(h, hp * hp * f + fp * fp);
    if (g.degree() >= 1) {
        std::optional<SingularPoint> w;
        if (want)
            if (auto r = root_somewhere(g)) {
                const FieldSpec& F = *r->first;
                const auto& e = gf::standard_embedding(K.degree(), F.degree());
                const uint32_t x0 = r->second;
                w = SingularPoint{&F, "affine", {x0, F.sqrt(f.embedded(e).eval(x0))}};
            }
        return singular(want, w);
    }
    // infinity, model v^2 + H(u) v = F(u) with u = 1/x, v = y/x^5
    const uint32_t h5 = h.coeff(5), h4 = h.coeff(4), f9 = f.coeff(9), f10 = f.coeff(10);
    if (!h5 && K.sqr(f9) == K.mul(K.sqr(h4), f10))
        return singular(want, SingularPoint{&K, "infinity", {K.sqrt(f10)}});
    return {true, std::nullopt};
}

}  // namespace

SmoothnessResult is_smooth(const CurveModel& c, bool want_witness) {
    if (const auto* h = std::get_if<HyperellipticCurve>(&c)) return smooth_hyp(*h, want_witness);
    const auto& q = std::get<QuadricCubicCurve>(c);
    return q.kind() == QuadricKind::NonSingular ? smooth_ns(q, want_witness) : smooth_cone(q, want_witness);
}

}  // namespace g4::curves
