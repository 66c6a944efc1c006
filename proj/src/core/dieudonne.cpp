#include "dieudonne.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace g4::eo {

std::string to_string(const FinalType& nu) {
    std::string s = "{";
    for (size_t i = 0; i < nu.nu.size(); ++i) s += (i ? "," : "") + std::to_string(nu.nu[i]);
    return s + "}";
}

std::string to_string(const YoungType& mu) {
    std::string s = "[";
    for (size_t i = 0; i < mu.mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu.mu[i]);
    return s + "]";
}

YoungType parse_young(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '[' && c != ']' && c != ' ') t += c;
    YoungType mu;
    if (t.empty()) return mu;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad Young type '" + text + "'");
        mu.mu.push_back(std::stoi(part));
    }
    return mu;
}

bool is_valid(const FinalType& nu) {
    int prev = 0;
    for (int v : nu.nu) {
        if (v - prev < 0 || v - prev > 1) return false;
        prev = v;
    }
    return true;
}

bool is_valid(const YoungType& mu, int g) {
    if (g < 1) return false;
    for (size_t i = 0; i < mu.mu.size(); ++i) {
        if (mu.mu[i] <= 0) return false;
        if (i && mu.mu[i] >= mu.mu[i - 1]) return false;
    }
    return mu.mu.empty() || mu.mu[0] <= g;
}

FinalType young_to_final(const YoungType& mu, int g) {
    if (!is_valid(mu, g)) throw DomainError("invalid Young type " + to_string(mu) + " for g=" + std::to_string(g));
    // d_i = i - nu(i) is nondecreasing and mu is its conjugate: mu_j = #{i : d_i >= j}.
    std::vector<int> d;
    const int mu1 = mu.mu.empty() ? 0 : mu.mu[0];
    d.insert(d.end(), g - mu1, 0);
    for (size_t j = 0; j < mu.mu.size(); ++j) {
        const int next = j + 1 < mu.mu.size() ? mu.mu[j + 1] : 0;
        d.insert(d.end(), mu.mu[j] - next, static_cast<int>(j) + 1);
    }
    FinalType nu;
    for (int i = 1; i <= g; ++i) nu.nu.push_back(i - d[i - 1]);
    if (!is_valid(nu)) throw DomainError("no final type has Young type " + to_string(mu));
    return nu;
}

YoungType final_to_young(const FinalType& nu) {
    if (!is_valid(nu)) throw DomainError("invalid final type " + to_string(nu));
    YoungType mu;
    for (int j = 1;; ++j) {
        int c = 0;
        for (int i = 1; i <= nu.g(); ++i) c += (i - nu.nu[i - 1] >= j);
        if (c == 0) break;
        mu.mu.push_back(c);
    }
    return mu;
}

int codimension(const YoungType& mu) {
    int s = 0;
    for (int v : mu.mu) s += v;
    return s;
}

std::vector<YoungType> prank_zero_types(int g) {
    std::vector<YoungType> out;
    // subsets of {1..g-1} as the remaining parts below mu_1 = g
    for (uint32_t s = 0; s < (1u << (g - 1)); ++s) {
        YoungType mu{{g}};
        for (int v = g - 1; v >= 1; --v)
            if (s >> (v - 1) & 1u) mu.mu.push_back(v);
        out.push_back(mu);
    }
    std::sort(out.begin(), out.end(), [](const YoungType& a, const YoungType& b) {
        if (a.mu.size() != b.mu.size()) return a.mu.size() < b.mu.size();
        return a.mu < b.mu;
    });
    return out;
}

Vec Bt1Module::apply_F(Vec v) const {
    Vec r = 0;
    for (int j = 0; v; ++j, v >>= 1)
        if (v & 1u) r ^= F[j];
    return r;
}

Vec Bt1Module::apply_V(Vec v) const {
    Vec r = 0;
    for (int j = 0; v; ++j, v >>= 1)
        if (v & 1u) r ^= V[j];
    return r;
}

namespace {

int pivot(Vec v) { return 31 - __builtin_clz(v); }

Vec reduce(Vec v, const std::vector<Vec>& basis) {
    for (Vec b : basis)
        if (v >> pivot(b) & 1u) v ^= b;
    return v;
}

}  // namespace

Subspace span(const std::vector<Vec>& vectors) {
    std::vector<Vec> basis;
    for (Vec v : vectors) {
        std::sort(basis.begin(), basis.end(), std::greater<>());
        v = reduce(v, basis);
        if (!v) continue;
        const int p = pivot(v);
        for (auto& b : basis)
            if (b >> p & 1u) b ^= v;
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    // full reduction: clear every pivot column in the other rows
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            if (i != j && (basis[j] >> pivot(basis[i]) & 1u)) basis[j] ^= basis[i];
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return Subspace{basis};
}

Subspace image(const Bt1Module& m, const Subspace& w, bool use_F) {
    std::vector<Vec> imgs;
    for (Vec v : w.basis) imgs.push_back(use_F ? m.apply_F(v) : m.apply_V(v));
    return span(imgs);
}

namespace {

// Basis of {v : sum_j v_j cols[j] = 0}.
Subspace kernel_of_columns(const std::vector<Vec>& cols) {
    std::vector<std::pair<Vec, Vec>> rows;  // (reduced value, combination)
    std::vector<Vec> ker;
    for (size_t j = 0; j < cols.size(); ++j) {
        Vec r = cols[j], c = Vec(1) << j;
        for (const auto& [pr, pc] : rows)
            if (r >> pivot(pr) & 1u) {
                r ^= pr;
                c ^= pc;
            }
        if (r == 0) ker.push_back(c);
        else rows.emplace_back(r, c);
    }
    return span(ker);
}

}  // namespace

Subspace preimage_F(const Bt1Module& m, const Subspace& w) {
    std::vector<Vec> cols;
    for (int j = 0; j < m.dim(); ++j) cols.push_back(reduce(m.F[j], w.basis));
    return kernel_of_columns(cols);
}

Subspace kernel_of(const Bt1Module& m, bool use_F) { return kernel_of_columns(use_F ? m.F : m.V); }

bool is_bt1(const Bt1Module& m) {
    if (m.g < 0 || m.dim() > 32 || static_cast<int>(m.F.size()) != m.dim() ||
        static_cast<int>(m.V.size()) != m.dim())
        return false;
    std::vector<Vec> all;
    for (int j = 0; j < m.dim(); ++j) all.push_back(Vec(1) << j);
    const Subspace full = span(all);
    const Subspace kerF = kernel_of(m, true), kerV = kernel_of(m, false);
    return kerF.dim() == m.g && kerF == image(m, full, false) && kerV == image(m, full, true);
}

bool pairing_is_standard(const Bt1Module& m) {
    if (static_cast<int>(m.pairing.size()) != m.dim()) return false;
    for (int a = 0; a < m.dim(); ++a)
        for (int b = 0; b < m.dim(); ++b)
            if ((m.pairing[a] >> b & 1u) != (m.pairing[b] >> a & 1u)) return false;
    for (int a = 0; a < m.dim(); ++a)
        if (__builtin_popcount(m.pairing[a]) != 1 || (m.pairing[a] >> a & 1u)) return false;
    return true;
}

Bt1Module standard_module(const FinalType& nu) {
    if (!is_valid(nu)) throw DomainError("invalid final type " + to_string(nu));
    const int g = nu.g();
    if (2 * g > 32) throw DomainError("dimension too large");
    std::vector<int> ext(2 * g + 1, 0);  // ext[i] = nu(i), symmetric extension
    for (int i = 1; i <= g; ++i) ext[i] = nu.nu[i - 1];
    for (int i = 0; i < g; ++i) ext[2 * g - i] = ext[i] + g - i;
    std::vector<int> ms, ns;
    for (int i = 1; i <= 2 * g; ++i) (ext[i - 1] < ext[i] ? ms : ns).push_back(i);
    std::reverse(ns.begin(), ns.end());  // n_1 is the largest
    Bt1Module m;
    m.g = g;
    m.labels.assign(2 * g, "");
    m.F.assign(2 * g, 0);
    m.V.assign(2 * g, 0);
    m.pairing.assign(2 * g, 0);
    auto z = [](int i) { return Vec(1) << (i - 1); };
    for (int i = 1; i <= g; ++i) {
        const int mi = ms[i - 1], ni = ns[i - 1];
        m.labels[mi - 1] = "X" + std::to_string(i);
        m.labels[ni - 1] = "Y" + std::to_string(i);
        m.F[mi - 1] = z(i);
        m.F[ni - 1] = 0;
        m.V[2 * g - i] = z(ni);  // V(Z_{2g-i+1}) = Z_{n_i}; V(Z_i) = 0 for i <= g
        m.pairing[mi - 1] |= z(ni);
        m.pairing[ni - 1] |= z(mi);
    }
    return m;
}

Bt1Module direct_sum(const Bt1Module& a, const Bt1Module& b) {
    if (a.dim() + b.dim() > 32) throw DomainError("dimension too large");
    Bt1Module m;
    m.g = a.g + b.g;
    const int shift = a.dim();
    m.labels = a.labels;
    for (const auto& l : b.labels) m.labels.push_back(l + "'");
    auto block = [&](const std::vector<Vec>& x, const std::vector<Vec>& y) {
        std::vector<Vec> r = x;
        for (Vec v : y) r.push_back(v << shift);
        return r;
    };
    m.F = block(a.F, b.F);
    m.V = block(a.V, b.V);
    m.pairing = block(a.pairing, b.pairing);
    return m;
}

std::vector<FiltrationEntry> canonical_filtration(const Bt1Module& m) {
    if (!is_bt1(m)) throw DomainError("module violates the BT1 conditions");
    std::vector<Vec> all;
    for (int j = 0; j < m.dim(); ++j) all.push_back(Vec(1) << j);
    std::set<Subspace> known{Subspace{}, span(all)};
    std::vector<Subspace> todo(known.begin(), known.end());
    while (!todo.empty()) {
        const Subspace w = todo.back();
        todo.pop_back();
        for (const Subspace& n : {image(m, w, false), preimage_F(m, w)})
            if (known.insert(n).second) todo.push_back(n);
    }
    std::vector<FiltrationEntry> out;
    for (const auto& w : known) out.push_back({w, w.dim(), image(m, w, false).dim()});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.dim < y.dim; });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].dim == out[i - 1].dim)
            throw ConsistencyError("canonical filtration is not a chain");
    return out;
}

FinalType final_type_of_module(const Bt1Module& m) {
    const auto chain = canonical_filtration(m);
    std::vector<int> nu(m.dim() + 1, -1);
    for (size_t i = 0; i < chain.size(); ++i) {
        nu[chain[i].dim] = chain[i].v_dim;
        if (i == 0) continue;
        const int a = chain[i - 1].dim, b = chain[i].dim;
        const int va = chain[i - 1].v_dim, vb = chain[i].v_dim;
        if (vb - va == b - a) {
            for (int t = 1; t < b - a; ++t) nu[a + t] = va + t;
        } else if (vb == va) {
            for (int t = 1; t < b - a; ++t) nu[a + t] = va;
        } else {
            throw ConsistencyError("mixed slope between canonical filtration members");
        }
    }
    return FinalType{std::vector<int>(nu.begin() + 1, nu.begin() + 1 + m.g)};
}

std::string describe(const Bt1Module& m, const Subspace& w) {
    std::string s = "<";
    for (size_t i = 0; i < w.basis.size(); ++i) {
        if (i) s += ", ";
        std::string term;
        for (int j = m.dim() - 1; j >= 0; --j)
            if (w.basis[i] >> j & 1u) term += (term.empty() ? "" : "+") + m.labels[j];
        s += term;
    }
    return s + ">";
}

namespace {

const std::map<std::string, FinalType>& catalog_table() {
    static const std::map<std::string, FinalType> t = {
        {"I_{1,1}", {{0}}},          {"I_{2,1}", {{0, 1}}},       {"I_{3,1}", {{0, 1, 2}}},
        {"I_{3,2}", {{0, 1, 1}}},    {"I_{4,1}", {{0, 1, 2, 3}}}, {"I_{4,2}", {{0, 1, 2, 2}}},
        {"I_{4,3}", {{0, 0, 1, 1}}},
    };
    return t;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : catalog_table()) names.push_back(k);
    return names;
}

Bt1Module catalog(const std::string& name) {
    std::string key = name;
    if (key.size() == 3 && key[0] == 'I') key = std::string("I_{") + key[1] + "," + key[2] + "}";
    auto it = catalog_table().find(key);
    if (it == catalog_table().end()) throw DomainError("unknown catalog entry '" + name + "'");
    return standard_module(it->second);
}

std::string EoResult::label() const {
    if (candidates.size() == 1) return to_string(candidates[0]);
    std::string s = "{";
    for (size_t i = 0; i < candidates.size(); ++i) s += (i ? "," : "") + to_string(candidates[i]);
    return s + "}";
}

EoResult eo_classify_curve(const zeta::StratumLabel& np, int a, std::optional<bool> type43) {
    if (np.p_rank > 0) throw DomainError("table covers V0 only");
    if (a < 1 || a > 4) throw DomainError("a-number " + std::to_string(a) + " impossible at p-rank 0 for g=4");
    using zeta::Stratum;
    EoResult r;
    r.a_number = a;
    r.p_rank = 0;
    const YoungType t4{{4}}, t41{{4, 1}}, t42{{4, 2}}, t43{{4, 3}};
    switch (a) {
        case 1:
            r.candidates = {t4};
            break;
        case 2:
            if (type43 == true) {
                r.candidates = {t43};
            } else if (np.stratum == Stratum::N14) {
                r.candidates = {t41};
            } else if (np.stratum == Stratum::N13) {
                r.candidates = {t42};
            } else if (np.stratum == Stratum::S4) {
                r.candidates = type43.has_value() ? std::vector<YoungType>{t42} : std::vector<YoungType>{t42, t43};
            } else {
                r.candidates = {t41, t42};
                if (!type43.has_value()) r.candidates.push_back(t43);
            }
            break;
        case 3:
            r.candidates = {YoungType{{4, 2, 1}}, YoungType{{4, 3, 1}}, YoungType{{4, 3, 2}}};
            r.smooth_impossible = true;
            break;
        default:
            r.candidates = {YoungType{{4, 3, 2, 1}}};
            r.smooth_impossible = true;
    }
    return r;
}

}  // namespace g4::eo
