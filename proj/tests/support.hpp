// Glue between library values and the oracles, plus seeded generators.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curves.hpp"
#include "gf2k.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Field field_of(const g4::gf::FieldSpec& f) { return {f.degree(), f.modulus()}; }

inline oracle::Field std_field(unsigned k) { return field_of(g4::gf::FieldSpec::standard(k)); }

// cubic of a quadric model as an oracle form with coefficients moved into `ext`
inline oracle::Form form_over(const g4::curves::QuadricCubicCurve& c, unsigned ext_degree) {
    const auto small = field_of(c.field());
    const auto big = std_field(ext_degree);
    const auto img = oracle::embedding_images(small, big);
    oracle::Form q;
    const auto& mons = g4::curves::cubic_monomials();
    for (int i = 0; i < 20; ++i) {
        const uint32_t coeff = oracle::apply_map(img, c.coeff(i));
        if (coeff) q.push_back({{mons[i][0], mons[i][1], mons[i][2], mons[i][3]}, coeff});
    }
    return q;
}

inline bool is_cone(const g4::curves::QuadricCubicCurve& c) { return c.kind() == g4::curves::QuadricKind::Cone; }

class Gen {
public:
    explicit Gen(uint64_t seed) : rng_(seed) {}
    uint64_t bits(unsigned n) { return n >= 64 ? rng_() : rng_() & ((uint64_t(1) << n) - 1); }
    uint32_t below(uint32_t n) { return std::uniform_int_distribution<uint32_t>(0, n - 1)(rng_); }
    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return rng_() & 1u; }

    uint32_t element(const g4::gf::FieldSpec& f) { return below(f.size()); }
    uint32_t nonzero(const g4::gf::FieldSpec& f) { return 1 + below(f.size() - 1); }

    g4::curves::QuadricCubicCurve quadric(g4::curves::QuadricKind kind, const g4::gf::FieldSpec& f) {
        g4::curves::Cubic q{};
        for (int i : g4::curves::reduced_monomials(kind)) q[i] = element(f);
        return g4::curves::QuadricCubicCurve(kind, f, q);
    }

    // (h, f) masks in the genus-4 hyperelliptic domain
    std::pair<uint32_t, uint32_t> hyperelliptic_masks() {
        for (;;) {
            const uint32_t h = uint32_t(bits(6)), f = uint32_t(bits(11));
            if (h == 0) continue;
            const int dh = 31 - __builtin_clz(h), df = f ? 31 - __builtin_clz(f) : -1;
            const int d = std::max(2 * dh, df);
            if (d == 9 || d == 10) return {h, f};
        }
    }

    std::vector<uint32_t> poly(const g4::gf::FieldSpec& f, int max_deg) {
        std::vector<uint32_t> c(range(0, max_deg) + 1);
        for (auto& x : c) x = element(f);
        return c;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace support
