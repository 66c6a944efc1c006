#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zeta.hpp"

namespace g4::eo {

/** nu(1)..nu(g), nondecreasing with steps 0 or 1 starting from nu(0) = 0. */
struct FinalType {
    std::vector<int> nu;
    int g() const { return static_cast<int>(nu.size()); }
    bool operator==(const FinalType& o) const { return nu == o.nu; }
};

/** Strictly decreasing positive parts, possibly empty. */
struct YoungType {
    std::vector<int> mu;
    bool operator==(const YoungType& o) const { return mu == o.mu; }
    bool operator<(const YoungType& o) const { return mu < o.mu; }
};

std::string to_string(const FinalType& nu);
std::string to_string(const YoungType& mu);
YoungType parse_young(const std::string& text);

bool is_valid(const FinalType& nu);
bool is_valid(const YoungType& mu, int g);

FinalType young_to_final(const YoungType& mu, int g);
YoungType final_to_young(const FinalType& nu);

/** Sum of the parts; the codimension of the stratum in A_g. */
int codimension(const YoungType& mu);

/** All Young types with mu_1 = g (p-rank zero), ordered by size then lexicographically. */
std::vector<YoungType> prank_zero_types(int g);

using Vec = uint32_t;  // bit j = coordinate on basis vector Z_{j+1}

/** Mod-p Dieudonne module of a BT1 over F2 with basis Z_1..Z_{2g}; maps stored by images of basis vectors. */
struct Bt1Module {
    int g = 0;
    std::vector<std::string> labels;  // labels[j] names Z_{j+1}
    std::vector<Vec> F, V;
    std::vector<Vec> pairing;  // pairing[a] bit b = <Z_{a+1}, Z_{b+1}>

    int dim() const { return 2 * g; }
    Vec apply_F(Vec v) const;
    Vec apply_V(Vec v) const;
};

/** Subspace stored as a fully reduced echelon basis (pivot = highest set bit), sorted descending. */
struct Subspace {
    std::vector<Vec> basis;
    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const Subspace& o) const { return basis == o.basis; }
    bool operator<(const Subspace& o) const { return basis < o.basis; }
};

Subspace span(const std::vector<Vec>& vectors);
Subspace image(const Bt1Module& m, const Subspace& w, bool use_F);
Subspace preimage_F(const Bt1Module& m, const Subspace& w);
Subspace kernel_of(const Bt1Module& m, bool use_F);
bool is_bt1(const Bt1Module& m);
bool pairing_is_standard(const Bt1Module& m);

Bt1Module standard_module(const FinalType& nu);
Bt1Module direct_sum(const Bt1Module& a, const Bt1Module& b);

struct FiltrationEntry {
    Subspace space;
    int dim;
    int v_dim;  // dim V(space)
};

/** Canonical filtration members sorted by dimension, from 0 to the full module. */
std::vector<FiltrationEntry> canonical_filtration(const Bt1Module& m);
FinalType final_type_of_module(const Bt1Module& m);

std::string describe(const Bt1Module& m, const Subspace& w);

/** I_{1,1}, I_{2,1}, I_{3,1}, I_{3,2}, I_{4,1}, I_{4,2}, I_{4,3} (also accepted without braces: I32). */
Bt1Module catalog(const std::string& name);
std::vector<std::string> catalog_names();

struct EoResult {
    std::vector<YoungType> candidates;  // one entry when the type is determined
    bool smooth_impossible = false;    // no smooth genus-4 curve in char 2 attains it
    int a_number = 0;
    int p_rank = 0;
    std::string label() const;
};

/** type43 empty means the criterion is not applicable to the model. */
EoResult eo_classify_curve(const zeta::StratumLabel& np, int a, std::optional<bool> type43);

}  // namespace g4::eo
