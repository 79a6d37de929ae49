#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fivestar/errors.hpp"

namespace fivestar {

using Complex = std::complex<double>;

/// |det| below this is treated as a degenerate (non-invertible) map.
inline constexpr double kDetEpsilon = 1e-12;

/// Point of the extended complex plane C ∪ {∞}. Infinity is an explicit
/// tagged value; it never leaks through as NaN or huge floats.
class ExtendedComplex {
public:
    ExtendedComplex() : value_(0.0, 0.0), finite_(true) {}
    ExtendedComplex(Complex z) : value_(z), finite_(true) {}
    ExtendedComplex(double x) : value_(x, 0.0), finite_(true) {}

    static ExtendedComplex infinity() {
        ExtendedComplex p;
        p.finite_ = false;
        return p;
    }

    bool is_finite() const { return finite_; }
    bool is_infinity() const { return !finite_; }

    /// Finite value; calling this on the point at infinity is a logic error.
    Complex value() const {
        if (!finite_) throw Error("ExtendedComplex: value() on point at infinity");
        return value_;
    }

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.finite_ != b.finite_) return false;
        if (!a.finite_) return true;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExtendedComplex& a, const ExtendedComplex& b) { return !(a == b); }

private:
    Complex value_;
    bool finite_;
};

/// Fractional-linear map x -> (a x + b) / (c x + d), stored as the 2x2
/// complex matrix [[a, b], [c, d]] acting on homogeneous coordinates.
struct MobiusMap {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    MobiusMap() = default;

    /// Construction from explicit entries validates invertibility.
    MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {
        if (std::abs(det()) < kDetEpsilon) throw DegenerateMap("MobiusMap: |det| below 1e-12");
    }

    /// Unchecked construction for maps coming out of training, where the
    /// determinant is monitored rather than enforced.
    static MobiusMap from_raw(Complex a, Complex b, Complex c, Complex d) {
        MobiusMap m;
        m.a = a;
        m.b = b;
        m.c = c;
        m.d = d;
        return m;
    }

    static MobiusMap identity() { return MobiusMap(); }
    static MobiusMap translation(Complex offset) { return {Complex(1.0), offset, Complex(0.0), Complex(1.0)}; }
    static MobiusMap scaling(Complex factor) { return {factor, Complex(0.0), Complex(0.0), Complex(1.0)}; }
    static MobiusMap inversion() { return {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
};

/// Solutions of apply(m, γ) = γ.
struct FixedPoints {
    enum class Kind { TwoPoints, OnePoint, AllPointsFixed };
    Kind kind = Kind::AllPointsFixed;
    Complex discriminant{0.0, 0.0}; // (a-d)^2 + 4bc
    ExtendedComplex gamma1;         // valid for TwoPoints and OnePoint
    ExtendedComplex gamma2;         // valid for TwoPoints only
};

enum class TransformClass : std::uint8_t {
    Parabolic,
    Circular,
    Elliptic,
    Hyperbolic,
    Loxodromic,
    Identity,
};

const char* to_string(TransformClass cls);

/// Conjugacy-class data of a map: its class, the multiplier k = e^(α+iβ)
/// split into log-magnitude and angle, and the normalized squared trace.
struct TransformCharacter {
    TransformClass cls = TransformClass::Identity;
    Complex k{1.0, 0.0};
    double rotation_angle = 0.0; // arg k
    double expansion = 0.0;      // ln |k|
    Complex trace_squared{4.0, 0.0};
};

/// Primitive factor of the five-transformation decomposition. The
/// inversion-reflection stage 1/x carries both inversion in the unit circle
/// and reflection across the real axis; its parameter is unused.
struct DecompositionStage {
    enum class Kind { Translation, InversionReflection, HomothetyRotation };
    Kind kind;
    Complex parameter{0.0, 0.0};
};

struct FiveDecomposition {
    bool affine_case = false; // c == 0 fallback: [homothety-rotation, translation]
    std::vector<DecompositionStage> stages;
};

/// Point on the unit sphere; the south pole is 0 and the north pole is ∞.
struct SpherePoint {
    double x = 0.0;
    double y = 0.0;
    double z = -1.0;
};

ExtendedComplex apply(const MobiusMap& m, const ExtendedComplex& x);

/// Matrix product m1 * m2, so apply(compose(m1, m2), x) = apply(m1, apply(m2, x)).
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);

/// True matrix inverse (adjugate / det); compose(m, inverse(m)) is the
/// identity up to rounding.
MobiusMap inverse(const MobiusMap& m);

/// Entrywise conjugate of the matrix; apply(conjugate(m), x) = conj(apply(m, conj(x))).
MobiusMap conjugate(const MobiusMap& m);

/// m / sqrt(det m) with the principal square root; det of the result is 1.
MobiusMap normalize_unimodular(const MobiusMap& m);

FixedPoints fixed_points(const MobiusMap& m);

/// Classification per the squared trace of the unimodular normalization:
/// nonreal tr² -> loxodromic; tr² = 4 -> parabolic (identity when the
/// matrix is ±I); tr² = 0 -> circular; tr² in (0,4) -> elliptic; tr² > 4
/// -> hyperbolic; real tr² < 0 -> loxodromic. Comparisons use relative
/// tolerance 1e-9 on tr².
TransformCharacter classify(const MobiusMap& m);

/// Factorization into translation by d/c, inversion-reflection, homothety-
/// rotation by (bc - ad)/c², translation by a/c. Maps with c = 0 fall back
/// to the affine pair [scale a/d, translate b/d] tagged affine_case.
FiveDecomposition decompose_five(const MobiusMap& m);

ExtendedComplex apply_stage(const DecompositionStage& stage, const ExtendedComplex& x);
ExtendedComplex apply_decomposition(const FiveDecomposition& dec, const ExtendedComplex& x);

/// Recompose the stage list into a single matrix (stages act first to last).
MobiusMap decomposition_to_map(const FiveDecomposition& dec);

SpherePoint project_to_sphere(const ExtendedComplex& x);

/// Inverse stereographic projection; requires |X²+Y²+Z² - 1| <= 2e-6.
/// Uses the pole-stable form (1+Z)/(X - iY) on the northern hemisphere.
ExtendedComplex project_to_plane(const SpherePoint& p);

/// Euclidean distance between the sphere images of two extended points
/// (the chordal metric). Total: handles infinity on either side.
double chordal_distance(const ExtendedComplex& x, const ExtendedComplex& y);

} // namespace fivestar
