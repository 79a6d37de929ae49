#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fivestar/dataset.hpp"
#include "fivestar/mobius.hpp"

namespace fivestar {

enum class BaselineKind : std::uint8_t { DistMult, ComplEx, PRotatE, RotatE, TransE, FiveStar };
enum class ScoreVariant : std::uint8_t { InnerProduct, Distance };
enum class DistanceNorm : std::uint8_t { L2, L1Moduli };

const char* to_string(BaselineKind kind);
/// Parses the CLI spelling: 5star, transe, complex, distmult, rotate, protate.
BaselineKind baseline_kind_from_string(const std::string& name);
ScoreVariant variant_for(BaselineKind kind);

/// Per-component freeze flags (uniform across entries of a family).
enum : std::uint8_t { kFreezeRe = 1, kFreezeIm = 2, kFreezeBoth = 3 };

/// Which real components of each parameter family are excluded from
/// gradient updates, and whether rel_a is parameterized by a phase angle
/// (keeping |a| = 1 exactly under gradient steps).
struct ConstraintMask {
    std::uint8_t entities = 0;
    std::array<std::uint8_t, 4> rel{0, 0, 0, 0}; // a, b, c, d
    bool rel_a_phase = false;
};

ConstraintMask mask_for(BaselineKind kind);

/// Relation-family indices into ModelParams::rel.
enum RelFamily : int { kRelA = 0, kRelB = 1, kRelC = 2, kRelD = 3 };

/// Denominators c·h + d smaller than this are clamped to kClampEpsilon
/// times their phase, keeping scores and gradients finite.
inline constexpr double kClampEpsilon = 1e-12;

inline Complex clamp_denominator(Complex denom) {
    const double mag = std::abs(denom);
    if (mag >= kClampEpsilon) return denom;
    if (mag == 0.0) return Complex(kClampEpsilon, 0.0);
    return denom * (kClampEpsilon / mag);
}

struct ModelParams {
    std::size_t n_entities = 0;
    std::size_t n_relations = 0;
    std::size_t dim = 0;
    BaselineKind kind = BaselineKind::FiveStar;
    ScoreVariant variant = ScoreVariant::InnerProduct;
    DistanceNorm norm = DistanceNorm::L2;
    ConstraintMask mask;

    std::vector<Complex> entities;            // n_entities * dim
    std::array<std::vector<Complex>, 4> rel;  // a, b, c, d: n_relations * dim each
    std::vector<double> rel_a_phase;          // n_relations * dim when mask.rel_a_phase

    Complex& ent(std::size_t e, std::size_t i) { return entities[e * dim + i]; }
    Complex ent(std::size_t e, std::size_t i) const { return entities[e * dim + i]; }
    Complex rel_entry(int family, std::size_t r, std::size_t i) const { return rel[family][r * dim + i]; }

    MobiusMap relation_map(std::size_t r, std::size_t i) const {
        const std::size_t k = r * dim + i;
        return MobiusMap::from_raw(rel[kRelA][k], rel[kRelB][k], rel[kRelC][k], rel[kRelD][k]);
    }

    /// Rebuilds rel_a = e^{i θ} from the phase array.
    void materialize_phases();
};

/// Entities are drawn from a complex Gaussian with per-component std
/// init_scale; relations start near the identity map (a, d near 1 and b, c
/// near 0, noise std 1e-3), then the kind's constraint mask pins its frozen
/// entries.
ModelParams init_params(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                        BaselineKind kind, std::uint64_t seed, double init_scale = 1e-3);

/// Element-wise transformed head h_r, with denominator clamping. Writes the
/// dim-sized result to out.
void transform_head(const ModelParams& p, std::uint32_t head, std::uint32_t relation,
                    std::span<Complex> out);
std::vector<Complex> transform_head(const ModelParams& p, std::uint32_t head, std::uint32_t relation);

double score(const ModelParams& p, const Triple& triple);

/// Score of a pre-transformed head against one candidate tail.
double score_transformed(const ModelParams& p, std::span<const Complex> w, std::uint32_t tail);

/// Scores of (head, relation, j) for every entity j.
void score_all(const ModelParams& p, std::uint32_t head, std::uint32_t relation, std::span<double> out);
std::vector<double> score_all(const ModelParams& p, std::uint32_t head, std::uint32_t relation);

/// Smallest |det| over all relation maps; training logs this and warns
/// below 1e-8.
double min_abs_det(const ModelParams& p);

// Constrained constructions realizing the five subsumed baselines. Shapes:
// entity-like inputs are n_entities*dim, relation-like inputs n_relations*dim.

/// Real entity/relation tables; b = c = 0, d = 1, all imaginary parts zero.
ModelParams from_distmult(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                          std::span<const double> entity_re, std::span<const double> rel_re);

/// Complex entities and relation vector r as rel_a; b = c = 0, d = 1.
ModelParams from_complex_baseline(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                                  std::span<const Complex> entities, std::span<const Complex> rel);

/// Unit-modulus entities and relations given as phase angles; inner product.
ModelParams from_protate(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                         std::span<const double> entity_phase, std::span<const double> rel_phase);

/// Complex entities, unit-modulus relation phases; distance variant.
ModelParams from_rotate(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                        std::span<const Complex> entities, std::span<const double> rel_phase);

/// Real entities and real translation vectors as rel_b; distance variant.
ModelParams from_transe(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                        std::span<const double> entity_re, std::span<const double> rel_re);

} // namespace fivestar
