#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cartier.hpp"
#include "gf2k.hpp"
#include "poly.hpp"

namespace g4::curves {

enum class QuadricKind { NonSingular, Cone };
enum class ModelKind { Hyperelliptic, NsQuadric, ConeQuadric };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(std::string_view s);

/** Exponents (X, Y, Z, T) of the 20 cubic monomials, lex order X > Y > Z > T. */
using Exponents = std::array<uint8_t, 4>;
const std::array<Exponents, 20>& cubic_monomials();
int monomial_index(int a, int b, int c, int d);
/** The 16 monomials surviving reduction modulo the quadric, as indices into cubic_monomials(). */
const std::array<int, 16>& reduced_monomials(QuadricKind kind);
std::string monomial_name(int index);

using Cubic = std::array<uint32_t, 20>;

/** V(Q, q) in P^3 with q reduced modulo Q (no ZT-divisible terms on Q_ns, no T^2-divisible terms on the cone). */
class QuadricCubicCurve {
public:
    QuadricCubicCurve(QuadricKind kind, const gf::FieldSpec& field, const Cubic& cubic);
    /** F2 curve from the 16-bit reduced coefficient mask. */
    static QuadricCubicCurve from_mask(QuadricKind kind, uint16_t mask);

    QuadricKind kind() const { return kind_; }
    const gf::FieldSpec& field() const { return *field_; }
    const Cubic& cubic() const { return q_; }
    uint32_t coeff(int monomial) const { return q_[monomial]; }
    /** Coefficient of the i-th reduced monomial. */
    uint32_t reduced_coeff(int i) const { return q_[reduced_monomials(kind_)[i]]; }
    uint16_t mask() const;
    QuadricCubicCurve embedded(const gf::Embedding& e) const;
    bool operator==(const QuadricCubicCurve& o) const {
        return kind_ == o.kind_ && field_->same_as(*o.field_) && q_ == o.q_;
    }

private:
    QuadricKind kind_;
    const gf::FieldSpec* field_;
    Cubic q_;
};

/** Reduce a cubic modulo XY + ZT or XY + T^2. */
Cubic reduce_cubic(QuadricKind kind, const gf::FieldSpec& f, Cubic q);

/** y^2 + h(x) y = f(x) with deg h <= 5, deg f <= 10, h != 0, max(2 deg h, deg f) in {9, 10}. */
class HyperellipticCurve {
public:
    HyperellipticCurve(gf::PolyF2k h, gf::PolyF2k f);
    static HyperellipticCurve from_masks(uint32_t h, uint32_t f);

    const gf::PolyF2k& h() const { return h_; }
    const gf::PolyF2k& f() const { return f_; }
    const gf::FieldSpec& field() const { return h_.field(); }
    bool operator==(const HyperellipticCurve& o) const { return h_ == o.h_ && f_ == o.f_; }

private:
    gf::PolyF2k h_, f_;
};

using CurveModel = std::variant<HyperellipticCurve, QuadricCubicCurve>;

ModelKind kind_of(const CurveModel& c);
const gf::FieldSpec& base_field(const CurveModel& c);

/** ns;c=0x.... / cone;c=0x.... / hyp;h=0x..;f=0x... over F2; a field tag is inserted for larger fields. */
std::string encode(const CurveModel& c);
CurveModel parse_curve(std::string_view text);

cartier::CoefficientGrid affine_model_ns(const QuadricCubicCurve& c);

/** Number of points over F_{q^n}; the scheme is counted as is (callers check smoothness). */
uint64_t count_points(const CurveModel& c, unsigned n);
std::vector<uint64_t> count_points_upto(const CurveModel& c, unsigned n_max);
/** Oracle: direct enumeration of P^3 over F_{q^n}. */
uint64_t count_points_p3(const QuadricCubicCurve& c, unsigned n);

struct SingularPoint {
    const gf::FieldSpec* field;
    std::string chart;  // "P3", "affine" or "infinity"
    std::vector<uint32_t> coords;
    std::string to_string() const;
};

struct SmoothnessResult {
    bool smooth;
    std::optional<SingularPoint> witness;  // may be absent even when singular
};

SmoothnessResult is_smooth(const CurveModel& c, bool want_witness = true);

/** Jacobian test at one point of P^3 with coordinates in ext (the curve's field must embed into ext). */
bool is_singular_at(const QuadricCubicCurve& c, const gf::FieldSpec& ext, const std::array<uint32_t, 4>& p);
/** Same for y^2 + h y = f: chart "affine" takes (x, y), chart "infinity" takes (v) at u = 0. */
bool is_singular_at(const HyperellipticCurve& c, const SingularPoint& p);

/** Substitution (X,Y,Z,T) -> M (X,Y,Z,T): row i gives the linear form replacing variable i. */
class ProjectiveTransform {
public:
    ProjectiveTransform(const gf::FieldSpec& f, const cartier::Matrix4& m);
    static ProjectiveTransform identity(const gf::FieldSpec& f);

    const gf::FieldSpec& field() const { return *field_; }
    const cartier::Matrix4& matrix() const { return m_; }
    /** Substituting this then o equals substituting (this * o). */
    ProjectiveTransform then(const ProjectiveTransform& o) const;
    ProjectiveTransform inverse() const;
    ProjectiveTransform embedded(const gf::Embedding& e) const;
    bool operator==(const ProjectiveTransform& o) const { return field_->same_as(*o.field_) && m_ == o.m_; }

private:
    const gf::FieldSpec* field_;
    cartier::Matrix4 m_;
};

/** Generators preserving Q_ns: type 1 and 2 take a parameter a, type 3 is the fixed list of three. */
std::vector<ProjectiveTransform> ns_generators(int type, const gf::FieldElement& a);

/** Q o t = lambda Q for some nonzero lambda. */
bool preserves_quadric(QuadricKind kind, const ProjectiveTransform& t);
Cubic substitute(const gf::FieldSpec& f, const Cubic& q, const cartier::Matrix4& m);
QuadricCubicCurve apply_transform(const QuadricCubicCurve& c, const ProjectiveTransform& t);

struct NormalizedCubic {
    QuadricCubicCurve curve;
    char form;  // 'a' or 'b'
    ProjectiveTransform transform;  // over curve.field()
    uint32_t scale;                 // curve = scale * apply_transform(original, transform)
};

/** Reaches form (a) or (b); may move to an extension field when a needed root is not rational. */
NormalizedCubic normalize_cubic(const QuadricCubicCurve& c);
bool has_normal_form(const QuadricCubicCurve& c, char form);

/** Order of the F2-automorphism group. */
uint64_t aut_order_f2(const CurveModel& c);
uint64_t jacobian_aut_order(const CurveModel& c, uint64_t aut_c);

/** Canonical encodings of all F2-models isomorphic to c by the model's substitution group. */
std::vector<std::string> f2_orbit(const CurveModel& c);
/** Size of that substitution group (384 hyperelliptic, |O(Q)(F2)| for quadric models). */
uint64_t f2_group_order(ModelKind kind);

/** Invertible 4x4 matrices over F2 as 16-bit row-major masks (bit 4i+j = entry (i,j)). */
const std::vector<uint16_t>& gl4_f2();

}  // namespace g4::curves
