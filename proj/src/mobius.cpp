#include "fivestar/mobius.hpp"

#include <cmath>

namespace fivestar {

namespace {

bool is_zero(Complex z) { return z.real() == 0.0 && z.imag() == 0.0; }

bool entrywise_close(const MobiusMap& m, Complex a, Complex b, Complex c, Complex d, double tol) {
    return std::abs(m.a - a) <= tol && std::abs(m.b - b) <= tol && std::abs(m.c - c) <= tol &&
           std::abs(m.d - d) <= tol;
}

} // namespace

const char* to_string(TransformClass cls) {
    switch (cls) {
        case TransformClass::Parabolic: return "parabolic";
        case TransformClass::Circular: return "circular";
        case TransformClass::Elliptic: return "elliptic";
        case TransformClass::Hyperbolic: return "hyperbolic";
        case TransformClass::Loxodromic: return "loxodromic";
        case TransformClass::Identity: return "identity";
    }
    return "unknown";
}

ExtendedComplex apply(const MobiusMap& m, const ExtendedComplex& x) {
    if (x.is_infinity()) {
        if (is_zero(m.c)) return ExtendedComplex::infinity();
        return ExtendedComplex(m.a / m.c);
    }
    const Complex z = x.value();
    const Complex denom = m.c * z + m.d;
    if (is_zero(denom)) return ExtendedComplex::infinity();
    return ExtendedComplex((m.a * z + m.b) / denom);
}

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
    MobiusMap r = MobiusMap::from_raw(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                                      m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
    if (std::abs(r.det()) < kDetEpsilon) throw DegenerateMap("compose: numerically degenerate product");
    return r;
}

MobiusMap inverse(const MobiusMap& m) {
    const Complex det = m.det();
    if (std::abs(det) < kDetEpsilon) throw DegenerateMap("inverse: |det| below 1e-12");
    return MobiusMap::from_raw(m.d / det, -m.b / det, -m.c / det, m.a / det);
}

MobiusMap conjugate(const MobiusMap& m) {
    return MobiusMap::from_raw(std::conj(m.a), std::conj(m.b), std::conj(m.c), std::conj(m.d));
}

MobiusMap normalize_unimodular(const MobiusMap& m) {
    const Complex det = m.det();
    if (std::abs(det) < kDetEpsilon) throw DegenerateMap("normalize_unimodular: |det| below 1e-12");
    const Complex s = std::sqrt(det); // principal branch
    return MobiusMap::from_raw(m.a / s, m.b / s, m.c / s, m.d / s);
}

FixedPoints fixed_points(const MobiusMap& m) {
    FixedPoints out;
    const Complex t = m.a - m.d;
    out.discriminant = t * t + 4.0 * m.b * m.c;

    if (is_zero(m.b) && is_zero(m.c) && m.a == m.d) {
        out.kind = FixedPoints::Kind::AllPointsFixed;
        return out;
    }

    if (is_zero(m.c)) {
        if (m.a == m.d) {
            // pure translation by b/d, b != 0
            out.kind = FixedPoints::Kind::OnePoint;
            out.gamma1 = ExtendedComplex::infinity();
            return out;
        }
        out.kind = FixedPoints::Kind::TwoPoints;
        out.gamma1 = ExtendedComplex(m.b / (m.d - m.a));
        out.gamma2 = ExtendedComplex::infinity();
        return out;
    }

    // c != 0: roots of the quadratic c γ² + (d - a) γ - b = 0.
    if (is_zero(out.discriminant)) {
        out.kind = FixedPoints::Kind::OnePoint;
        out.gamma1 = ExtendedComplex(t / (2.0 * m.c));
        return out;
    }
    const Complex s = std::sqrt(out.discriminant);
    // Pick the sign avoiding cancellation in t ± s, then recover the other
    // root from the product -b/c.
    const Complex q = (std::real(std::conj(t) * s) >= 0.0) ? (t + s) : (t - s);
    Complex g1, g2;
    if (is_zero(q)) {
        g1 = (t + s) / (2.0 * m.c);
        g2 = (t - s) / (2.0 * m.c);
    } else {
        g1 = q / (2.0 * m.c);
        g2 = (-2.0 * m.b) / q;
    }
    if (g1 == g2) {
        out.kind = FixedPoints::Kind::OnePoint;
        out.gamma1 = ExtendedComplex(g1);
        return out;
    }
    out.kind = FixedPoints::Kind::TwoPoints;
    out.gamma1 = ExtendedComplex(g1);
    out.gamma2 = ExtendedComplex(g2);
    return out;
}

TransformCharacter classify(const MobiusMap& m) {
    const MobiusMap n = normalize_unimodular(m);
    TransformCharacter out;
    const Complex tr = n.trace();
    out.trace_squared = tr * tr;
    const double tol = 1e-9 * (1.0 + std::abs(out.trace_squared));

    const double s = out.trace_squared.real();
    if (std::abs(out.trace_squared.imag()) > tol) {
        out.cls = TransformClass::Loxodromic;
    } else if (std::abs(s - 4.0) <= tol) {
        const bool plus = entrywise_close(n, 1.0, 0.0, 0.0, 1.0, 1e-9);
        const bool minus = entrywise_close(n, -1.0, 0.0, 0.0, -1.0, 1e-9);
        out.cls = (plus || minus) ? TransformClass::Identity : TransformClass::Parabolic;
    } else if (std::abs(s) <= tol) {
        out.cls = TransformClass::Circular;
    } else if (s > 0.0 && s < 4.0) {
        out.cls = TransformClass::Elliptic;
    } else if (s > 4.0) {
        out.cls = TransformClass::Hyperbolic;
    } else {
        // real tr² < 0 is outside [0, 4]
        out.cls = TransformClass::Loxodromic;
    }

    if (out.cls == TransformClass::Identity || out.cls == TransformClass::Parabolic) {
        out.k = Complex(1.0, 0.0);
        out.rotation_angle = 0.0;
        out.expansion = 0.0;
        return out;
    }

    // Eigenvalues of the unimodular matrix: λ± = (tr ± sqrt(tr² - 4)) / 2,
    // with λ+ λ- = 1. The multiplier is k = λ² for the eigenvalue with
    // |λ| >= 1; for |λ| = 1 pick the one whose k has angle in (0, π].
    const Complex disc = std::sqrt(out.trace_squared - 4.0);
    const Complex l1 = (tr + disc) / 2.0;
    const Complex l2 = (tr - disc) / 2.0;
    const double a1 = std::abs(l1);
    const double a2 = std::abs(l2);
    Complex lambda;
    if (std::abs(a1 - a2) <= 1e-12 * (a1 + a2)) {
        const Complex k1 = l1 * l1;
        lambda = std::arg(k1) > 0.0 ? l1 : l2;
    } else {
        lambda = a1 > a2 ? l1 : l2;
    }
    out.k = lambda * lambda;
    out.rotation_angle = std::arg(out.k);
    out.expansion = std::log(std::abs(out.k));
    return out;
}

FiveDecomposition decompose_five(const MobiusMap& m) {
    FiveDecomposition dec;
    using Kind = DecompositionStage::Kind;
    if (is_zero(m.c)) {
        dec.affine_case = true;
        dec.stages = {{Kind::HomothetyRotation, m.a / m.d}, {Kind::Translation, m.b / m.d}};
        return dec;
    }
    dec.stages = {{Kind::Translation, m.d / m.c},
                  {Kind::InversionReflection, Complex(0.0)},
                  {Kind::HomothetyRotation, (m.b * m.c - m.a * m.d) / (m.c * m.c)},
                  {Kind::Translation, m.a / m.c}};
    return dec;
}

ExtendedComplex apply_stage(const DecompositionStage& stage, const ExtendedComplex& x) {
    using Kind = DecompositionStage::Kind;
    switch (stage.kind) {
        case Kind::Translation:
            if (x.is_infinity()) return x;
            return ExtendedComplex(x.value() + stage.parameter);
        case Kind::InversionReflection: {
            if (x.is_infinity()) return ExtendedComplex(Complex(0.0));
            const Complex z = x.value();
            if (z.real() == 0.0 && z.imag() == 0.0) return ExtendedComplex::infinity();
            return ExtendedComplex(1.0 / z);
        }
        case Kind::HomothetyRotation:
            if (x.is_infinity()) return x;
            return ExtendedComplex(stage.parameter * x.value());
    }
    return x;
}

ExtendedComplex apply_decomposition(const FiveDecomposition& dec, const ExtendedComplex& x) {
    ExtendedComplex cur = x;
    for (const auto& stage : dec.stages) cur = apply_stage(stage, cur);
    return cur;
}

MobiusMap decomposition_to_map(const FiveDecomposition& dec) {
    MobiusMap acc = MobiusMap::identity();
    using Kind = DecompositionStage::Kind;
    for (const auto& stage : dec.stages) {
        MobiusMap s;
        switch (stage.kind) {
            case Kind::Translation: s = MobiusMap::translation(stage.parameter); break;
            case Kind::InversionReflection: s = MobiusMap::inversion(); break;
            case Kind::HomothetyRotation: s = MobiusMap::scaling(stage.parameter); break;
        }
        acc = compose(s, acc); // stage applies after everything accumulated so far
    }
    return acc;
}

SpherePoint project_to_sphere(const ExtendedComplex& x) {
    if (x.is_infinity()) return {0.0, 0.0, 1.0};
    const Complex z = x.value();
    const double n2 = std::norm(z);
    const double denom = 1.0 + n2;
    return {2.0 * z.real() / denom, 2.0 * z.imag() / denom, (n2 - 1.0) / denom};
}

ExtendedComplex project_to_plane(const SpherePoint& p) {
    const double n2 = p.x * p.x + p.y * p.y + p.z * p.z;
    if (std::abs(n2 - 1.0) > 2e-6) throw NotOnSphere("project_to_plane: point not on unit sphere");
    if (p.z > 0.0) {
        // (X + iY)/(1 - Z) = (1 + Z)/(X - iY); the latter is stable near the
        // north pole where 1 - Z loses precision.
        const Complex denom(p.x, -p.y);
        if (denom.real() == 0.0 && denom.imag() == 0.0) return ExtendedComplex::infinity();
        return ExtendedComplex((1.0 + p.z) / denom);
    }
    return ExtendedComplex(Complex(p.x, p.y) / (1.0 - p.z));
}

double chordal_distance(const ExtendedComplex& x, const ExtendedComplex& y) {
    const SpherePoint a = project_to_sphere(x);
    const SpherePoint b = project_to_sphere(y);
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

} // namespace fivestar
