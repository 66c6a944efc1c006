#include "poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "errors.hpp"

namespace g4::gf {

PolyF2k::PolyF2k(const FieldSpec& f, std::vector<uint32_t> coeffs) : field_(&f), c_(std::move(coeffs)) {
    for (uint32_t c : c_)
        if (!f.contains(c)) throw std::invalid_argument("coefficient does not fit in " + f.tag());
    trim();
}

PolyF2k PolyF2k::from_elements(const std::vector<FieldElement>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("field of an empty coefficient list is unknown");
    const FieldSpec& f = coeffs.front().field();
    std::vector<uint32_t> raw;
    raw.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.field().same_as(f)) throw std::invalid_argument("mixed field specs in polynomial");
        raw.push_back(c.bits());
    }
    return PolyF2k(f, std::move(raw));
}

PolyF2k PolyF2k::monomial(const FieldSpec& f, uint32_t c, unsigned deg) {
    std::vector<uint32_t> v(deg + 1, 0);
    v[deg] = c;
    return PolyF2k(f, std::move(v));
}

PolyF2k PolyF2k::from_mask(const FieldSpec& f, uint64_t mask) {
    std::vector<uint32_t> v;
    for (; mask; mask >>= 1) v.push_back(static_cast<uint32_t>(mask & 1u));
    return PolyF2k(f, std::move(v));
}

void PolyF2k::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void PolyF2k::check_same(const PolyF2k& o) const {
    if (!field_->same_as(*o.field_))
        throw std::invalid_argument("mixed field specs: " + field_->tag() + " vs " + o.field_->tag());
}

PolyF2k PolyF2k::operator+(const PolyF2k& o) const {
    check_same(o);
    PolyF2k r(*field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] ^= o.c_[i];
    r.trim();
    return r;
}

PolyF2k PolyF2k::operator*(const PolyF2k& o) const {
    check_same(o);
    PolyF2k r(*field_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] ^= field_->mul(c_[i], o.c_[j]);
    }
    r.trim();
    return r;
}

std::pair<PolyF2k, PolyF2k> divmod(const PolyF2k& a, const PolyF2k& b) {
    a.check_same(b);
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const FieldSpec& f = *a.field_;
    PolyF2k q(f), r = a;
    if (a.degree() < b.degree()) return {q, r};
    const int db = b.degree();
    const uint32_t inv_lead = f.inv(b.leading());
    q.c_.assign(a.degree() - db + 1, 0);
    for (int d = r.degree(); d >= db; --d) {
        const uint32_t c = r.c_[d];
        if (!c) continue;
        const uint32_t s = f.mul(c, inv_lead);
        q.c_[d - db] = s;
        for (int j = 0; j <= db; ++j) r.c_[d - db + j] ^= f.mul(s, b.c_[j]);
    }
    q.trim();
    r.trim();
    return {q, r};
}

PolyF2k PolyF2k::operator%(const PolyF2k& o) const { return divmod(*this, o).second; }

PolyF2k PolyF2k::scaled(uint32_t s) const {
    PolyF2k r(*field_);
    if (s == 0) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = field_->mul(c, s);
    return r;
}

PolyF2k PolyF2k::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_->inv(leading()));
}

PolyF2k PolyF2k::derivative() const {
    PolyF2k r(*field_);
    if (c_.size() < 2) return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); i += 2) r.c_[i - 1] = c_[i];
    r.trim();
    return r;
}

PolyF2k PolyF2k::sqrt() const {
    PolyF2k r(*field_);
    r.c_.assign((c_.size() + 1) / 2, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i % 2) {
            if (c_[i]) throw DomainError("polynomial is not a square");
        } else {
            r.c_[i / 2] = field_->sqrt(c_[i]);
        }
    }
    r.trim();
    return r;
}

uint32_t PolyF2k::eval(uint32_t x) const {
    uint32_t v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = field_->mul(v, x) ^ c_[i];
    return v;
}

PolyF2k PolyF2k::embedded(const Embedding& e) const {
    if (!e.from().same_as(*field_)) throw std::invalid_argument("embedding source field mismatch");
    std::vector<uint32_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = e.apply(c_[i]);
    return PolyF2k(e.to(), std::move(v));
}

std::string PolyF2k::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        const bool unit = c_[i] == 1;
        if (!unit || i == 0) s += field_->size() == 2 ? "1" : gf::to_string(FieldElement(*field_, c_[i]));
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

PolyF2k gcd(const PolyF2k& a, const PolyF2k& b) {
    PolyF2k x = a, y = b;
    while (!y.is_zero()) {
        PolyF2k r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyF2k square_mod(const PolyF2k& a, const PolyF2k& m) { return (a * a) % m; }

FieldElement poly_resultant(const PolyF2k& a0, const PolyF2k& b0) {
    if (!a0.field().same_as(b0.field())) throw std::invalid_argument("mixed field specs in resultant");
    const FieldSpec& f = a0.field();
    if (a0.is_zero() && b0.is_zero()) throw DomainError("undefined resultant");
    if (a0.is_zero() || b0.is_zero()) {
        const PolyF2k& other = a0.is_zero() ? b0 : a0;
        return FieldElement(f, other.degree() == 0 ? 1u : 0u);
    }
    // Euclid: Res(a, b) = lc(b)^(deg a - deg r) Res(b, r), r = a mod b; signs vanish in char 2.
    PolyF2k a = a0, b = b0;
    uint32_t acc = 1;
    for (;;) {
        if (b.degree() == 0) return FieldElement(f, f.mul(acc, f.pow(b.leading(), a.degree())));
        if (a.degree() == 0) return FieldElement(f, f.mul(acc, f.pow(a.leading(), b.degree())));
        PolyF2k r = a % b;
        if (r.is_zero()) return FieldElement(f, 0);
        acc = f.mul(acc, f.pow(b.leading(), a.degree() - r.degree()));
        a = std::move(b);
        b = std::move(r);
    }
}

namespace {

// Square-free decomposition of a monic polynomial: pairs (g_i, i) with f = prod g_i^i.
void squarefree(const PolyF2k& f, int mult, std::vector<std::pair<PolyF2k, int>>& out) {
    if (f.degree() <= 0) return;
    const PolyF2k df = f.derivative();
    if (df.is_zero()) {
        squarefree(f.sqrt(), 2 * mult, out);
        return;
    }
    PolyF2k c = gcd(f, df);
    PolyF2k w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        PolyF2k y = gcd(w, c);
        PolyF2k fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree(c.sqrt(), 2 * mult, out);
}

PolyF2k frobenius_power_mod(PolyF2k a, unsigned squarings, const PolyF2k& m) {
    for (unsigned i = 0; i < squarings; ++i) a = square_mod(a, m);
    return a;
}

void equal_degree_split(const PolyF2k& g, int d, std::mt19937& rng, std::vector<PolyF2k>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FieldSpec& f = g.field();
    const unsigned kd = f.degree() * static_cast<unsigned>(d);
    std::uniform_int_distribution<uint32_t> coeff(0, f.size() - 1);
    for (;;) {
        std::vector<uint32_t> v(g.degree());
        for (auto& c : v) c = coeff(rng);
        PolyF2k a(f, std::move(v));
        if (a.degree() < 1) continue;
        PolyF2k t = a, p = a;
        for (unsigned i = 1; i < kd; ++i) {
            p = square_mod(p, g);
            t = t + p;
        }
        PolyF2k u = gcd(g, t);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree_split(u, d, rng, out);
            equal_degree_split(g / u, d, rng, out);
            return;
        }
    }
}

bool poly_less(const PolyF2k& a, const PolyF2k& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace

std::vector<std::pair<PolyF2k, int>> factor(const PolyF2k& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<PolyF2k, int>> sqf, out;
    squarefree(f.monic(), 1, sqf);
    std::mt19937 rng(0x5eed2u);
    const FieldSpec& field = f.field();
    const PolyF2k x = PolyF2k::monomial(field, 1, 1);
    for (const auto& [g0, mult] : sqf) {
        PolyF2k rest = g0;
        PolyF2k h = x % rest;
        for (int d = 1; 2 * d <= rest.degree(); ++d) {
            h = frobenius_power_mod(h, field.degree(), rest);
            PolyF2k g = gcd(rest, h + x);
            if (g.degree() > 0) {
                std::vector<PolyF2k> parts;
                equal_degree_split(g, d, rng, parts);
                for (auto& p : parts) out.emplace_back(p.monic(), mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) out.emplace_back(rest.monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    // Merge equal factors that came from different square-free layers.
    std::vector<std::pair<PolyF2k, int>> merged;
    for (auto& p : out) {
        if (!merged.empty() && merged.back().first == p.first)
            merged.back().second += p.second;
        else
            merged.push_back(p);
    }
    return merged;
}

std::vector<uint32_t> roots_in_field(const PolyF2k& f) {
    std::vector<uint32_t> roots;
    if (f.degree() < 1) return roots;
    for (const auto& [p, m] : factor(f))
        if (p.degree() == 1) roots.push_back(p.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace g4::gf
