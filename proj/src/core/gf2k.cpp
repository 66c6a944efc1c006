#include "gf2k.hpp"

#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "errors.hpp"

namespace g4::gf {

namespace {

// One irreducible polynomial per degree (Conway polynomials for p = 2).
constexpr std::array<uint32_t, kMaxDegree + 1> kModulus = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x5B,   0x83,    0x11D,
    0x211,   0x46F,  0x805,  0x10EB, 0x201B, 0x40A9, 0x8035, 0x1002D,
};

int bit_degree(uint32_t p) { return p ? 31 - __builtin_clz(p) : -1; }

uint32_t f2_poly_mod(uint32_t a, uint32_t m) {
    const int dm = bit_degree(m);
    for (int d = bit_degree(a); d >= dm; d = bit_degree(a)) a ^= m << (d - dm);
    return a;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> ps;
    for (uint32_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool is_irreducible_f2(uint32_t poly) {
    const int d = bit_degree(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    // Every candidate divisor of degree 1..d/2.
    for (int e = 1; 2 * e <= d; ++e)
        for (uint32_t q = 1u << e; q < (2u << e); ++q)
            if (f2_poly_mod(poly, q) == 0) return false;
    return true;
}

uint32_t slow_mul(uint32_t a, uint32_t b, uint32_t modulus, unsigned k) {
    uint32_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> k) a ^= modulus;
    }
    return r;
}

FieldSpec::FieldSpec(unsigned k, uint32_t modulus) : k_(k), modulus_(modulus) {
    if (k < 1 || k > kMaxDegree) throw std::invalid_argument("field degree must be in 1..16");
    if (bit_degree(modulus) != static_cast<int>(k) || !is_irreducible_f2(modulus))
        throw std::invalid_argument("modulus is not an irreducible polynomial of degree " +
                                    std::to_string(k));
    size_ = 1u << k;
    order_ = size_ - 1;

    uint32_t gen = 1;
    if (order_ > 1) {
        const auto ps = prime_factors(order_);
        auto slow_pow = [&](uint32_t a, uint32_t e) {
            uint32_t r = 1;
            for (; e; e >>= 1, a = slow_mul(a, a, modulus_, k_))
                if (e & 1u) r = slow_mul(r, a, modulus_, k_);
            return r;
        };
        for (gen = 2; gen < size_; ++gen) {
            bool primitive = true;
            for (uint32_t p : ps)
                if (slow_pow(gen, order_ / p) == 1) { primitive = false; break; }
            if (primitive) break;
        }
    }

    log_.assign(size_, 0);
    exp_.assign(2 * static_cast<size_t>(order_) + 1, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < order_; ++i) {
        exp_[i] = x;
        exp_[i + order_] = x;
        log_[x] = i;
        x = slow_mul(x, gen, modulus_, k_);
    }
    exp_[2 * order_] = exp_[0];

    sqrt_.assign(size_, 0);
    for (uint32_t a = 0; a < size_; ++a) sqrt_[sqr(a)] = a;

    for (unsigned i = 0; i < k_; ++i) {
        uint32_t b = 1u << i, t = 0, y = b;
        for (unsigned j = 0; j < k_; ++j) {
            t ^= y;
            y = sqr(y);
        }
        if (t & 1u) trace_mask_ |= b;
    }
}

const FieldSpec& FieldSpec::standard(unsigned k) {
    if (k < 1 || k > kMaxDegree) throw DomainError("extension degree " + std::to_string(k) +
                                                   " exceeds the supported range 1..16");
    static std::array<std::unique_ptr<FieldSpec>, kMaxDegree + 1> fields;
    static std::array<std::once_flag, kMaxDegree + 1> once;
    std::call_once(once[k], [k] { fields[k] = std::make_unique<FieldSpec>(k, kModulus[k]); });
    return *fields[k];
}

uint32_t FieldSpec::standard_modulus(unsigned k) {
    if (k < 1 || k > kMaxDegree) throw std::invalid_argument("field degree must be in 1..16");
    return kModulus[k];
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return exp_[order_ - log_[a]];
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<uint64_t>(log_[a]) * (e % order_)) % order_];
}

uint32_t FieldSpec::cube_root(uint32_t a) const {
    if (a == 0) return 0;
    const uint32_t l = log_[a];
    if (order_ % 3 != 0) {
        // x -> x^3 is a bijection; invert 3 modulo the group order
        uint64_t inv3 = 1;
        while ((3 * inv3) % order_ != 1 % order_) ++inv3;
        return exp_[(static_cast<uint64_t>(l) * inv3) % order_];
    }
    if (l % 3 != 0) return size_;
    return exp_[l / 3];
}

Embedding::Embedding(const FieldSpec& from, const FieldSpec& to) : from_(&from), to_(&to) {
    const unsigned a = from.degree(), b = to.degree();
    if (b % a != 0)
        throw std::invalid_argument("no embedding F_2^" + std::to_string(a) + " -> F_2^" +
                                    std::to_string(b));
    const uint32_t m = from.modulus();
    uint32_t root = to.size();
    for (uint32_t r = 0; r < to.size() && root == to.size(); ++r) {
        uint32_t v = 0;
        for (int i = static_cast<int>(a); i >= 0; --i) v = to.mul(v, r) ^ ((m >> i) & 1u);
        if (v == 0) root = r;
    }
    if (root == to.size()) throw std::logic_error("modulus has no root in the target field");
    images_.resize(a);
    uint32_t p = 1;
    for (unsigned i = 0; i < a; ++i, p = to.mul(p, root)) images_[i] = p;
}

const Embedding& standard_embedding(unsigned a, unsigned b) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{a, b}];
    if (!slot) slot = std::make_unique<Embedding>(FieldSpec::standard(a), FieldSpec::standard(b));
    return *slot;
}

FieldElement::FieldElement(const FieldSpec& field, uint32_t bits) : field_(&field), bits_(bits) {
    if (!field.contains(bits))
        throw std::invalid_argument("bit pattern does not fit in " + field.tag());
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!field_->same_as(*o.field_))
        throw std::invalid_argument("mixed field specs: " + field_->tag() + " vs " + o.field_->tag());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, bits_ ^ o.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, field_->mul(bits_, o.bits_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, field_->div(bits_, o.bits_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_as(*o.field_) && bits_ == o.bits_;
}

std::string to_string(const FieldElement& x) {
    char buf[16];
    auto res = std::to_chars(buf, buf + sizeof buf, x.bits(), 16);
    return x.field().tag() + ":0x" + std::string(buf, res.ptr);
}

const FieldSpec& field_from_tag(std::string_view tag) {
    if (tag.size() < 2 || tag[0] != 'F') throw ParseError("bad field tag '" + std::string(tag) + "'");
    uint32_t size = 0;
    auto res = std::from_chars(tag.data() + 1, tag.data() + tag.size(), size);
    if (res.ec != std::errc() || res.ptr != tag.data() + tag.size() || size < 2 ||
        (size & (size - 1)) != 0 || size > (1u << kMaxDegree))
        throw ParseError("bad field tag '" + std::string(tag) + "'");
    return FieldSpec::standard(static_cast<unsigned>(__builtin_ctz(size)));
}

FieldElement parse_field_element(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':' in field element");
    const FieldSpec& f = field_from_tag(text.substr(0, colon));
    auto hex = text.substr(colon + 1);
    if (hex.size() < 3 || hex[0] != '0' || (hex[1] != 'x' && hex[1] != 'X'))
        throw ParseError("field element value must be 0x-prefixed hex");
    uint32_t bits = 0;
    auto res = std::from_chars(hex.data() + 2, hex.data() + hex.size(), bits, 16);
    if (res.ec != std::errc() || res.ptr != hex.data() + hex.size() || !f.contains(bits))
        throw ParseError("bad field element '" + std::string(text) + "'");
    return FieldElement(f, bits);
}

}  // namespace g4::gf
