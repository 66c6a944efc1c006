#include "curves.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "errors.hpp"

namespace g4::curves {

using cartier::Matrix4;
using gf::FieldSpec;
using gf::PolyF2k;

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Hyperelliptic: return "hyp";
        case ModelKind::NsQuadric: return "ns";
        case ModelKind::ConeQuadric: return "cone";
    }
    return "?";
}

ModelKind model_kind_from_string(std::string_view s) {
    if (s == "hyp") return ModelKind::Hyperelliptic;
    if (s == "ns") return ModelKind::NsQuadric;
    if (s == "cone") return ModelKind::ConeQuadric;
    throw ParseError("unknown model kind '" + std::string(s) + "'");
}

namespace {

struct MonomialTables {
    std::array<Exponents, 20> mons{};
    int index[4][4][4][4];
    std::array<int, 16> reduced_ns{}, reduced_cone{};
    MonomialTables() {
        int n = 0;
        for (int a = 3; a >= 0; --a)
            for (int b = 3 - a; b >= 0; --b)
                for (int c = 3 - a - b; c >= 0; --c) {
                    const int d = 3 - a - b - c;
                    mons[n] = {uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)};
                    index[a][b][c][d] = n++;
                }
        int ins = 0, ic = 0;
        for (int i = 0; i < 20; ++i) {
            const auto& e = mons[i];
            if (!(e[2] >= 1 && e[3] >= 1)) reduced_ns[ins++] = i;
            if (e[3] < 2) reduced_cone[ic++] = i;
        }
    }
};

const MonomialTables& tables() {
    static const MonomialTables t;
    return t;
}

}  // namespace

const std::array<Exponents, 20>& cubic_monomials() { return tables().mons; }

int monomial_index(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b + c + d != 3) throw std::invalid_argument("not a cubic monomial");
    return tables().index[a][b][c][d];
}

const std::array<int, 16>& reduced_monomials(QuadricKind kind) {
    return kind == QuadricKind::NonSingular ? tables().reduced_ns : tables().reduced_cone;
}

std::string monomial_name(int index) {
    static const char* vars = "XYZT";
    std::string s;
    const auto& e = cubic_monomials()[index];
    for (int v = 0; v < 4; ++v) {
        if (!e[v]) continue;
        s += vars[v];
        if (e[v] > 1) s += std::to_string(e[v]);
    }
    return s;
}

Cubic reduce_cubic(QuadricKind kind, const FieldSpec&, Cubic q) {
    const auto& mons = cubic_monomials();
    for (int i = 0; i < 20; ++i) {
        if (!q[i]) continue;
        const auto& e = mons[i];
        int target = -1;
        // char 2: ZT = XY on Q_ns and T^2 = XY on the cone
        if (kind == QuadricKind::NonSingular && e[2] >= 1 && e[3] >= 1)
            target = monomial_index(e[0] + 1, e[1] + 1, e[2] - 1, e[3] - 1);
        else if (kind == QuadricKind::Cone && e[3] >= 2)
            target = monomial_index(e[0] + 1, e[1] + 1, e[2], e[3] - 2);
        if (target >= 0) {
            q[target] ^= q[i];
            q[i] = 0;
        }
    }
    return q;
}

QuadricCubicCurve::QuadricCubicCurve(QuadricKind kind, const FieldSpec& field, const Cubic& cubic)
    : kind_(kind), field_(&field) {
    for (uint32_t c : cubic)
        if (!field.contains(c)) throw std::invalid_argument("cubic coefficient does not fit in " + field.tag());
    q_ = reduce_cubic(kind, field, cubic);
}

QuadricCubicCurve QuadricCubicCurve::from_mask(QuadricKind kind, uint16_t mask) {
    Cubic q{};
    const auto& red = reduced_monomials(kind);
    for (int i = 0; i < 16; ++i) q[red[i]] = (mask >> i) & 1u;
    return QuadricCubicCurve(kind, FieldSpec::standard(1), q);
}

uint16_t QuadricCubicCurve::mask() const {
    if (field_->degree() != 1) throw DomainError("coefficient mask exists only over F2");
    uint16_t m = 0;
    for (int i = 0; i < 16; ++i)
        if (reduced_coeff(i)) m |= uint16_t(1u << i);
    return m;
}

QuadricCubicCurve QuadricCubicCurve::embedded(const gf::Embedding& e) const {
    if (!e.from().same_as(*field_)) throw std::invalid_argument("embedding source field mismatch");
    Cubic q{};
    for (int i = 0; i < 20; ++i) q[i] = e.apply(q_[i]);
    return QuadricCubicCurve(kind_, e.to(), q);
}

HyperellipticCurve::HyperellipticCurve(PolyF2k h, PolyF2k f) : h_(std::move(h)), f_(std::move(f)) {
    if (!h_.field().same_as(f_.field())) throw std::invalid_argument("mixed field specs in curve");
    if (h_.is_zero()) throw DomainError("h = 0 is not allowed in characteristic 2");
    if (h_.degree() > 5 || f_.degree() > 10) throw DomainError("need deg h <= 5 and deg f <= 10");
    const int top = std::max(2 * h_.degree(), f_.degree());
    if (top != 9 && top != 10) throw DomainError("genus-4 degree condition max(2 deg h, deg f) in {9,10} fails");
}

HyperellipticCurve HyperellipticCurve::from_masks(uint32_t h, uint32_t f) {
    const FieldSpec& f2 = FieldSpec::standard(1);
    return HyperellipticCurve(PolyF2k::from_mask(f2, h), PolyF2k::from_mask(f2, f));
}

ModelKind kind_of(const CurveModel& c) {
    if (std::holds_alternative<HyperellipticCurve>(c)) return ModelKind::Hyperelliptic;
    return std::get<QuadricCubicCurve>(c).kind() == QuadricKind::NonSingular ? ModelKind::NsQuadric
                                                                             : ModelKind::ConeQuadric;
}

const FieldSpec& base_field(const CurveModel& c) {
    return std::visit([](const auto& m) -> const FieldSpec& { return m.field(); }, c);
}

namespace {

std::string hex(uint32_t v, int width) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%0*x", width, v);
    return buf;
}

uint32_t parse_hex(std::string_view s) {
    if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X')) throw ParseError("expected 0x-prefixed hex, got '" + std::string(s) + "'");
    uint32_t v = 0;
    auto res = std::from_chars(s.data() + 2, s.data() + s.size(), v, 16);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError("bad hex '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (;;) {
        const size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == s.npos ? s.npos : p - start));
        if (p == s.npos) break;
        start = p + 1;
    }
    return out;
}

std::string hex_list(const std::vector<uint32_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + hex(v[i], 1);
    return s;
}

std::vector<uint32_t> parse_hex_list(std::string_view s, const FieldSpec& f) {
    std::vector<uint32_t> out;
    for (auto part : split(s, ',')) {
        const uint32_t v = parse_hex(part);
        if (!f.contains(v)) throw ParseError("coefficient " + std::string(part) + " does not fit in " + f.tag());
        out.push_back(v);
    }
    return out;
}

std::string_view value_of(std::string_view field, std::string_view key) {
    if (field.size() <= key.size() || field.substr(0, key.size()) != key || field[key.size()] != '=')
        throw ParseError("expected '" + std::string(key) + "=' in '" + std::string(field) + "'");
    return field.substr(key.size() + 1);
}

}  // namespace

std::string encode(const CurveModel& c) {
    if (const auto* h = std::get_if<HyperellipticCurve>(&c)) {
        if (h->field().degree() == 1) {
            uint32_t hm = 0, fm = 0;
            for (int i = 0; i <= h->h().degree(); ++i) hm |= h->h().coeff(i) << i;
            for (int i = 0; i <= h->f().degree(); ++i) fm |= h->f().coeff(i) << i;
            return "hyp;h=" + hex(hm, 2) + ";f=" + hex(fm, 3);
        }
        return "hyp;" + h->field().tag() + ";h=" + hex_list(h->h().raw()) + ";f=" +
               (h->f().is_zero() ? std::string("0x0") : hex_list(h->f().raw()));
    }
    const auto& q = std::get<QuadricCubicCurve>(c);
    const std::string tag = q.kind() == QuadricKind::NonSingular ? "ns" : "cone";
    if (q.field().degree() == 1) return tag + ";c=" + hex(q.mask(), 4);
    std::vector<uint32_t> v(16);
    for (int i = 0; i < 16; ++i) v[i] = q.reduced_coeff(i);
    return tag + ";" + q.field().tag() + ";c=" + hex_list(v);
}

CurveModel parse_curve(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    auto parts = split(text, ';');
    if (parts.size() < 2) throw ParseError("bad curve encoding '" + std::string(text) + "'");
    const ModelKind kind = model_kind_from_string(parts[0]);
    size_t next = 1;
    const FieldSpec* field = &FieldSpec::standard(1);
    const bool tagged = !parts[1].empty() && parts[1][0] == 'F';
    if (tagged) {
        field = &gf::field_from_tag(parts[1]);
        next = 2;
    }
    if (kind == ModelKind::Hyperelliptic) {
        if (parts.size() != next + 2) throw ParseError("hyperelliptic encoding needs h= and f=");
        auto hs = value_of(parts[next], "h"), fs = value_of(parts[next + 1], "f");
        if (!tagged) {
            const uint32_t hm = parse_hex(hs), fm = parse_hex(fs);
            if (hm >= 64 || fm >= 2048) throw ParseError("h or f degree too large in '" + std::string(text) + "'");
            return HyperellipticCurve::from_masks(hm, fm);
        }
        return HyperellipticCurve(PolyF2k(*field, parse_hex_list(hs, *field)), PolyF2k(*field, parse_hex_list(fs, *field)));
    }
    if (parts.size() != next + 1) throw ParseError("quadric encoding needs exactly one c= field");
    auto cs = value_of(parts[next], "c");
    const QuadricKind qk = kind == ModelKind::NsQuadric ? QuadricKind::NonSingular : QuadricKind::Cone;
    if (!tagged) {
        const uint32_t m = parse_hex(cs);
        if (m > 0xFFFF) throw ParseError("cubic mask exceeds 16 bits");
        return QuadricCubicCurve::from_mask(qk, static_cast<uint16_t>(m));
    }
    auto v = parse_hex_list(cs, *field);
    if (v.size() != 16) throw ParseError("expected 16 reduced coefficients");
    Cubic q{};
    for (int i = 0; i < 16; ++i) q[reduced_monomials(qk)[i]] = v[i];
    return QuadricCubicCurve(qk, *field, q);
}

cartier::CoefficientGrid affine_model_ns(const QuadricCubicCurve& c) {
    if (c.kind() != QuadricKind::NonSingular) throw DomainError("wrong chart");
    cartier::CoefficientGrid g{&c.field(), {}};
    const auto& mons = cubic_monomials();
    for (int i = 0; i < 20; ++i) {
        if (!c.coeff(i)) continue;
        const auto& e = mons[i];
        g.a[e[0] + e[2]][e[1] + e[2]] ^= c.coeff(i);
    }
    return g;
}

// ---------------------------------------------------------------- transforms

ProjectiveTransform::ProjectiveTransform(const FieldSpec& f, const Matrix4& m) : field_(&f), m_(m) {
    for (const auto& row : m)
        for (uint32_t v : row)
            if (!f.contains(v)) throw std::invalid_argument("matrix entry does not fit in " + f.tag());
    if (cartier::matrix_rank(f, m) != 4) throw DomainError("transform is not invertible");
}

ProjectiveTransform ProjectiveTransform::identity(const FieldSpec& f) {
    Matrix4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return ProjectiveTransform(f, m);
}

ProjectiveTransform ProjectiveTransform::then(const ProjectiveTransform& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("mixed field specs in transform composition");
    Matrix4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][j] ^= field_->mul(m_[i][k], o.m_[k][j]);
    return ProjectiveTransform(*field_, r);
}

ProjectiveTransform ProjectiveTransform::inverse() const {
    Matrix4 a = m_, inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (!a[piv][col]) ++piv;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const uint32_t s = field_->inv(a[col][col]);
        for (int j = 0; j < 4; ++j) {
            a[col][j] = field_->mul(a[col][j], s);
            inv[col][j] = field_->mul(inv[col][j], s);
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || !a[r][col]) continue;
            const uint32_t t = a[r][col];
            for (int j = 0; j < 4; ++j) {
                a[r][j] ^= field_->mul(t, a[col][j]);
                inv[r][j] ^= field_->mul(t, inv[col][j]);
            }
        }
    }
    return ProjectiveTransform(*field_, inv);
}

ProjectiveTransform ProjectiveTransform::embedded(const gf::Embedding& e) const {
    Matrix4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = e.apply(m_[i][j]);
    return ProjectiveTransform(e.to(), r);
}

std::vector<ProjectiveTransform> ns_generators(int type, const gf::FieldElement& a_el) {
    const FieldSpec& f = a_el.field();
    const uint32_t a = a_el.bits();
    std::vector<Matrix4> ms;
    auto id = [] {
        Matrix4 m{};
        for (int i = 0; i < 4; ++i) m[i][i] = 1;
        return m;
    };
    enum { X, Y, Z, T };
    if (type == 1) {
        Matrix4 m = id();
        m[X][Z] = a, m[T][Y] = a;  // X -> X + aZ, T -> T + aY
        ms.push_back(m);
        m = id();
        m[Y][T] = a, m[Z][X] = a;  // Y -> Y + aT, Z -> Z + aX
        ms.push_back(m);
        m = id();
        m[X][T] = a, m[Z][Y] = a;  // X -> X + aT, Z -> Z + aY
        ms.push_back(m);
        m = id();
        m[Y][Z] = a, m[T][X] = a;  // Y -> Y + aZ, T -> T + aX
        ms.push_back(m);
    } else if (type == 2) {
        if (a == 0) throw DomainError("scaling parameter must be nonzero");
        const int pairs[4][2] = {{Y, Z}, {X, T}, {X, Z}, {Y, T}};
        for (const auto& p : pairs) {
            Matrix4 m = id();
            m[p[0]][p[0]] = a;
            m[p[1]][p[1]] = a;
            ms.push_back(m);
        }
    } else if (type == 3) {
        const int perms[3][4] = {{X, Y, T, Z}, {Z, T, X, Y}, {T, Z, X, Y}};
        for (const auto& p : perms) {
            Matrix4 m{};
            for (int i = 0; i < 4; ++i) m[i][p[i]] = 1;
            ms.push_back(m);
        }
    } else {
        throw std::invalid_argument("generator type must be 1, 2 or 3");
    }
    std::vector<ProjectiveTransform> out;
    for (const auto& m : ms) out.emplace_back(f, m);
    return out;
}

namespace {

// Quadratic form coefficients indexed by (i <= j): 10 entries.
using Quad = std::array<uint32_t, 10>;

int qidx(int i, int j) {
    if (i > j) std::swap(i, j);
    static const int base[4] = {0, 4, 7, 9};
    return base[i] + (j - i);
}

Quad quadric_form(QuadricKind kind) {
    Quad q{};
    q[qidx(0, 1)] = 1;
    if (kind == QuadricKind::NonSingular) q[qidx(2, 3)] = 1;
    else q[qidx(3, 3)] = 1;
    return q;
}

Quad substitute_quad(const FieldSpec& f, const Quad& q, const Matrix4& m) {
    Quad r{};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const uint32_t c = q[qidx(i, j)];
            if (!c) continue;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) r[qidx(a, b)] ^= f.mul(c, f.mul(m[i][a], m[j][b]));
        }
    return r;
}

}  // namespace

bool preserves_quadric(QuadricKind kind, const ProjectiveTransform& t) {
    const FieldSpec& f = t.field();
    const Quad q = quadric_form(kind);
    const Quad r = substitute_quad(f, q, t.matrix());
    const uint32_t lambda = r[qidx(0, 1)];
    if (!lambda) return false;
    for (int i = 0; i < 10; ++i)
        if (r[i] != f.mul(lambda, q[i])) return false;
    return true;
}

Cubic substitute(const FieldSpec& f, const Cubic& q, const Matrix4& m) {
    static const auto idx3 = [] {
        std::array<int, 64> t{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    int e[4] = {0, 0, 0, 0};
                    ++e[a], ++e[b], ++e[c];
                    t[a * 16 + b * 4 + c] = monomial_index(e[0], e[1], e[2], e[3]);
                }
        return t;
    }();
    Cubic r{};
    const auto& mons = cubic_monomials();
    for (int i = 0; i < 20; ++i) {
        if (!q[i]) continue;
        int v[3], n = 0;
        for (int var = 0; var < 4; ++var)
            for (int k = 0; k < mons[i][var]; ++k) v[n++] = var;
        for (int a = 0; a < 4; ++a) {
            const uint32_t ca = f.mul(q[i], m[v[0]][a]);
            if (!ca) continue;
            for (int b = 0; b < 4; ++b) {
                const uint32_t cb = f.mul(ca, m[v[1]][b]);
                if (!cb) continue;
                for (int c = 0; c < 4; ++c) r[idx3[a * 16 + b * 4 + c]] ^= f.mul(cb, m[v[2]][c]);
            }
        }
    }
    return r;
}

QuadricCubicCurve apply_transform(const QuadricCubicCurve& c, const ProjectiveTransform& t) {
    if (!c.field().same_as(t.field())) throw std::invalid_argument("curve and transform over different fields");
    if (!preserves_quadric(c.kind(), t)) throw DomainError("transform does not preserve the quadric");
    return QuadricCubicCurve(c.kind(), c.field(), substitute(c.field(), c.cubic(), t.matrix()));
}

// ---------------------------------------------------------------- normalization

bool has_normal_form(const QuadricCubicCurve& c, char form) {
    if (c.kind() != QuadricKind::NonSingular) return false;
    const int x3 = monomial_index(3, 0, 0, 0), y3 = monomial_index(0, 3, 0, 0);
    const int z3 = monomial_index(0, 0, 3, 0), t3 = monomial_index(0, 0, 0, 3);
    if (c.coeff(x3) != 1 || c.coeff(z3) != 0 || c.coeff(t3) != 0) return false;
    return form == 'a' ? c.coeff(y3) == 1 : form == 'b' ? c.coeff(y3) == 0 : false;
}

namespace {

struct NormState {
    QuadricCubicCurve curve;
    ProjectiveTransform transform;
    uint32_t scale;

    void extend_to(unsigned m) {
        if (m == curve.field().degree()) return;
        if (m > gf::kMaxDegree) throw DomainError("normalization needs an extension beyond F_2^16");
        const auto& e = gf::standard_embedding(curve.field().degree(), m);
        curve = curve.embedded(e);
        transform = transform.embedded(e);
        scale = e.apply(scale);
    }
    void apply(const ProjectiveTransform& t) {
        curve = apply_transform(curve, t);
        transform = transform.then(t);
    }
};

// Smallest extension (degree multiple of the current one, up to 16) holding a root of p; returns the root there.
std::optional<std::pair<unsigned, uint32_t>> find_root(const std::vector<uint32_t>& coeffs, const FieldSpec& base) {
    PolyF2k p(base, coeffs);
    if (p.degree() < 1) return std::nullopt;
    int best = -1;
    for (const auto& [fac, mult] : gf::factor(p))
        if (best < 0 || fac.degree() < best) best = fac.degree();
    const unsigned m = base.degree() * static_cast<unsigned>(best);
    if (m > gf::kMaxDegree) return std::nullopt;
    const auto& e = gf::standard_embedding(base.degree(), m);
    const auto roots = gf::roots_in_field(p.embedded(e));
    if (roots.empty()) return std::nullopt;
    return std::make_pair(m, roots.front());
}

}  // namespace

NormalizedCubic normalize_cubic(const QuadricCubicCurve& c) {
    if (c.kind() != QuadricKind::NonSingular) throw DomainError("normalization is defined for the non-singular quadric");
    const int x3 = monomial_index(3, 0, 0, 0), y3 = monomial_index(0, 3, 0, 0);
    const int z3 = monomial_index(0, 0, 3, 0), t3 = monomial_index(0, 0, 0, 3);
    NormState st{c, ProjectiveTransform::identity(c.field()), 1};
    auto cube_present = [&] {
        const auto& q = st.curve;
        return q.coeff(x3) || q.coeff(y3) || q.coeff(z3) || q.coeff(t3);
    };

    if (!cube_present()) {
        // Some type-1 substitution creates a cube; search the base field first, then small extensions.
        bool done = false;
        const unsigned k0 = st.curve.field().degree();
        for (unsigned m = k0; m <= gf::kMaxDegree && !done; m += k0) {
            if (m % k0) continue;
            NormState trial = st;
            trial.extend_to(m);
            const FieldSpec& f = trial.curve.field();
            for (uint32_t a = 1; a < f.size() && !done; ++a)
                for (const auto& t : ns_generators(1, gf::FieldElement(f, a))) {
                    const auto moved = apply_transform(trial.curve, t);
                    if (moved.coeff(x3) || moved.coeff(y3) || moved.coeff(z3) || moved.coeff(t3)) {
                        trial.apply(t);
                        st = trial;
                        done = true;
                        break;
                    }
                }
        }
        if (!done) throw DomainError("cubic reducible in a way contradicting smoothness");
    }

    if (!st.curve.coeff(x3)) {
        // Closure of the three type-3 permutations, in breadth-first order from the identity.
        const FieldSpec& f = st.curve.field();
        const auto gens = ns_generators(3, gf::FieldElement::one(f));
        std::vector<ProjectiveTransform> group{ProjectiveTransform::identity(f)};
        for (size_t i = 0; i < group.size(); ++i)
            for (const auto& g : gens) {
                auto h = group[i].then(g);
                if (std::find(group.begin(), group.end(), h) == group.end()) group.push_back(h);
            }
        bool moved = false;
        for (const auto& g : group)
            if (apply_transform(st.curve, g).coeff(x3)) {
                st.apply(g);
                moved = true;
                break;
            }
        if (!moved) throw DomainError("no quadric symmetry moves a cube to X^3");
    }

    auto rescale = [&] {
        const FieldSpec& f = st.curve.field();
        const uint32_t s = f.inv(st.curve.coeff(x3));
        Cubic q = st.curve.cubic();
        for (auto& v : q) v = f.mul(v, s);
        st.curve = QuadricCubicCurve(st.curve.kind(), f, q);
        st.scale = f.mul(st.scale, s);
    };
    rescale();

    // Kill Z^3 with X -> X + aZ, T -> T + aY, then T^3 with X -> X + aT, Z -> Z + aY.
    const int kill[2] = {z3, t3};
    const int gen_index[2] = {0, 2};
    for (int step = 0; step < 2; ++step) {
        const int target = kill[step];
        if (!st.curve.coeff(target)) continue;
        const auto& q = st.curve;
        // new coefficient: c_target + a c_{X W^2} + a^2 c_{X^2 W} + a^3, W the variable being killed
        const int w = step == 0 ? 2 : 3;
        int e1[4] = {1, 0, 0, 0}, e2[4] = {2, 0, 0, 0};
        e1[w] = 2;
        e2[w] = 1;
        const std::vector<uint32_t> poly = {q.coeff(target), q.coeff(monomial_index(e1[0], e1[1], e1[2], e1[3])),
                                            q.coeff(monomial_index(e2[0], e2[1], e2[2], e2[3])), 1};
        const auto root = find_root(poly, q.field());
        if (!root) throw DomainError("normalization needs an extension beyond F_2^16");
        st.extend_to(root->first);
        st.apply(ns_generators(1, gf::FieldElement(st.curve.field(), root->second))[gen_index[step]]);
        if (st.curve.coeff(target)) throw std::logic_error("cube elimination failed");
    }

    char form = 'b';
    if (st.curve.coeff(y3)) {
        // (X, aY, aZ, T) scales Y^3 by a^3
        uint32_t target = st.curve.field().inv(st.curve.coeff(y3));
        uint32_t a = st.curve.field().cube_root(target);
        if (a == st.curve.field().size()) {
            st.extend_to(3 * st.curve.field().degree());
            target = st.curve.field().inv(st.curve.coeff(y3));
            a = st.curve.field().cube_root(target);
        }
        st.apply(ns_generators(2, gf::FieldElement(st.curve.field(), a))[0]);
        form = 'a';
    }
    if (!has_normal_form(st.curve, form)) throw std::logic_error("normalization did not reach a normal form");
    return NormalizedCubic{st.curve, form, st.transform, st.scale};
}

// ---------------------------------------------------------------- automorphisms

const std::vector<uint16_t>& gl4_f2() {
    static const std::vector<uint16_t> all = [] {
        std::vector<uint16_t> out;
        for (uint32_t m = 0; m < 65536; ++m) {
            uint8_t rows[4];
            for (int i = 0; i < 4; ++i) rows[i] = (m >> (4 * i)) & 0xF;
            int rank = 0;
            for (int bit = 3; bit >= 0; --bit) {
                int piv = -1;
                for (int r = rank; r < 4; ++r)
                    if (rows[r] >> bit & 1) { piv = r; break; }
                if (piv < 0) continue;
                std::swap(rows[piv], rows[rank]);
                for (int r = 0; r < 4; ++r)
                    if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
                ++rank;
            }
            if (rank == 4) out.push_back(static_cast<uint16_t>(m));
        }
        return out;
    }();
    return all;
}

namespace {

Matrix4 unpack(uint16_t m) {
    Matrix4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = (m >> (4 * i + j)) & 1u;
    return r;
}

const std::vector<Matrix4>& quadric_stabilizer_f2(QuadricKind kind) {
    static const auto build = [](QuadricKind k) {
        std::vector<Matrix4> out;
        const FieldSpec& f2 = FieldSpec::standard(1);
        const Quad q = quadric_form(k);
        for (uint16_t m : gl4_f2()) {
            const Matrix4 mm = unpack(m);
            if (substitute_quad(f2, q, mm) == q) out.push_back(mm);
        }
        return out;
    };
    static const std::vector<Matrix4> ns = build(QuadricKind::NonSingular);
    static const std::vector<Matrix4> cone = build(QuadricKind::Cone);
    return kind == QuadricKind::NonSingular ? ns : cone;
}

// F2[x] helpers on bitmasks.
uint32_t clmul(uint32_t a, uint32_t b) {
    uint32_t r = 0;
    for (; b; b >>= 1, a <<= 1)
        if (b & 1u) r ^= a;
    return r;
}

uint32_t mask_pow(uint32_t a, int e) {
    uint32_t r = 1;
    for (int i = 0; i < e; ++i) r = clmul(r, a);
    return r;
}

// sum_i p_i (a x + b)^i (c x + d)^(n - i)
uint32_t homogeneous_substitute(uint32_t p, int n, int a, int b, int c, int d) {
    const uint32_t num = (uint32_t(a) << 1) | uint32_t(b), den = (uint32_t(c) << 1) | uint32_t(d);
    uint32_t r = 0;
    for (int i = 0; i <= n; ++i)
        if (p >> i & 1u) r ^= clmul(mask_pow(num, i), mask_pow(den, n - i));
    return r;
}

uint32_t mask_square(uint32_t t) {
    uint32_t r = 0;
    for (int i = 0; t; ++i, t >>= 1)
        if (t & 1u) r |= 1u << (2 * i);
    return r;
}

struct HypModel {
    uint32_t h, f;
};

HypModel hyp_masks(const HyperellipticCurve& c) {
    if (c.field().degree() != 1) throw DomainError("unsupported base field");
    HypModel m{0, 0};
    for (int i = 0; i <= c.h().degree(); ++i) m.h |= c.h().coeff(i) << i;
    for (int i = 0; i <= c.f().degree(); ++i) m.f |= c.f().coeff(i) << i;
    return m;
}

template <class Fn>
void for_each_hyp_image(const HypModel& m, Fn&& fn) {
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (((a & d) ^ (b & c)) == 0) continue;
                    const uint32_t H = homogeneous_substitute(m.h, 5, a, b, c, d);
                    const uint32_t F = homogeneous_substitute(m.f, 10, a, b, c, d);
                    for (uint32_t t = 0; t < 64; ++t) fn(HypModel{H, F ^ mask_square(t) ^ clmul(H, t)});
                }
}

const QuadricCubicCurve& require_f2(const QuadricCubicCurve& q) {
    if (q.field().degree() != 1) throw DomainError("unsupported base field");
    return q;
}

}  // namespace

uint64_t aut_order_f2(const CurveModel& c) {
    if (const auto* h = std::get_if<HyperellipticCurve>(&c)) {
        const HypModel m = hyp_masks(*h);
        uint64_t n = 0;
        for_each_hyp_image(m, [&](const HypModel& r) { n += (r.h == m.h && r.f == m.f); });
        return n;
    }
    const auto& q = require_f2(std::get<QuadricCubicCurve>(c));
    uint64_t n = 0;
    for (const auto& m : quadric_stabilizer_f2(q.kind()))
        if (reduce_cubic(q.kind(), q.field(), substitute(q.field(), q.cubic(), m)) == q.cubic()) ++n;
    return n;
}

uint64_t jacobian_aut_order(const CurveModel& c, uint64_t aut_c) {
    return std::holds_alternative<HyperellipticCurve>(c) ? aut_c : 2 * aut_c;
}

std::vector<std::string> f2_orbit(const CurveModel& c) {
    std::set<std::string> out;
    if (const auto* h = std::get_if<HyperellipticCurve>(&c)) {
        for_each_hyp_image(hyp_masks(*h), [&](const HypModel& r) {
            out.insert(encode(HyperellipticCurve::from_masks(r.h, r.f)));
        });
    } else {
        const auto& q = require_f2(std::get<QuadricCubicCurve>(c));
        for (const auto& m : quadric_stabilizer_f2(q.kind()))
            out.insert(encode(QuadricCubicCurve(q.kind(), q.field(), substitute(q.field(), q.cubic(), m))));
    }
    return {out.begin(), out.end()};
}

uint64_t f2_group_order(ModelKind kind) {
    switch (kind) {
        case ModelKind::Hyperelliptic: return 6 * 64;
        case ModelKind::NsQuadric: return quadric_stabilizer_f2(QuadricKind::NonSingular).size();
        case ModelKind::ConeQuadric: return quadric_stabilizer_f2(QuadricKind::Cone).size();
    }
    return 0;
}

}  // namespace g4::curves
