#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace g4::gf {

constexpr unsigned kMaxDegree = 16;

/** True iff the F2[t] polynomial with bit i = coefficient of t^i is irreducible. */
bool is_irreducible_f2(uint32_t poly);

/** Product of a and b in F2[t]/(modulus), computed bit by bit (no tables). */
uint32_t slow_mul(uint32_t a, uint32_t b, uint32_t modulus, unsigned k);

/**
 * The field F_{2^k} = F2[t]/(modulus). Elements are k-bit masks in the basis 1, t, ..., t^{k-1}.
 * Multiplication goes through discrete log tables over a primitive element.
 */
class FieldSpec {
public:
    FieldSpec(unsigned k, uint32_t modulus);

    /** Shared instance for the fixed modulus table; built on first use, then immutable. */
    static const FieldSpec& standard(unsigned k);
    static uint32_t standard_modulus(unsigned k);

    unsigned degree() const { return k_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t size() const { return size_; }
    std::string tag() const { return "F" + std::to_string(size_); }
    bool contains(uint32_t bits) const { return bits < size_; }
    bool same_as(const FieldSpec& other) const {
        return this == &other || (k_ == other.k_ && modulus_ == other.modulus_);
    }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    uint32_t sqr(uint32_t a) const { return mul(a, a); }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t sqrt(uint32_t a) const { return sqrt_[a]; }
    /** Absolute trace to F2. */
    unsigned trace(uint32_t a) const { return __builtin_parity(a & trace_mask_); }
    /** Cube root if one exists in this field, else the size() sentinel. */
    uint32_t cube_root(uint32_t a) const;

private:
    unsigned k_;
    uint32_t modulus_;
    uint32_t size_;
    uint32_t order_;  // size_ - 1
    std::vector<uint32_t> log_;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> sqrt_;
    uint32_t trace_mask_ = 0;
};

/** Field homomorphism F_{2^a} -> F_{2^b} (a | b) sending t to a fixed root of the source modulus. */
class Embedding {
public:
    Embedding(const FieldSpec& from, const FieldSpec& to);
    const FieldSpec& from() const { return *from_; }
    const FieldSpec& to() const { return *to_; }
    uint32_t apply(uint32_t bits) const {
        uint32_t r = 0;
        for (unsigned i = 0; bits; ++i, bits >>= 1)
            if (bits & 1u) r ^= images_[i];
        return r;
    }

private:
    const FieldSpec* from_;
    const FieldSpec* to_;
    std::vector<uint32_t> images_;  // image of t^i
};

/** Cached embedding between standard fields; a must divide b. */
const Embedding& standard_embedding(unsigned a, unsigned b);

class FieldElement {
public:
    FieldElement(const FieldSpec& field, uint32_t bits);
    static FieldElement zero(const FieldSpec& f) { return FieldElement(f, 0); }
    static FieldElement one(const FieldSpec& f) { return FieldElement(f, 1); }

    const FieldSpec& field() const { return *field_; }
    uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;

    FieldElement frobenius() const { return FieldElement(*field_, field_->sqr(bits_)); }
    FieldElement sqrt() const { return FieldElement(*field_, field_->sqrt(bits_)); }
    FieldElement inverse() const { return FieldElement(*field_, field_->inv(bits_)); }
    FieldElement pow(uint64_t e) const { return FieldElement(*field_, field_->pow(bits_, e)); }
    unsigned trace() const { return field_->trace(bits_); }

private:
    void check_same(const FieldElement& o) const;
    const FieldSpec* field_;
    uint32_t bits_;
};

/** The unique square root in characteristic 2. */
inline FieldElement field_sqrt(const FieldElement& x) { return x.sqrt(); }

/** "F16:0x9" style serialization (field size tag, hex bits). */
std::string to_string(const FieldElement& x);
FieldElement parse_field_element(std::string_view text);

/** Standard field whose tag (e.g. "F16") matches; throws ParseError otherwise. */
const FieldSpec& field_from_tag(std::string_view tag);

}  // namespace g4::gf
