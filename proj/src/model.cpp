#include "fivestar/model.hpp"

#include <algorithm>
#include <cmath>

#include "fivestar/rng.hpp"

namespace fivestar {

const char* to_string(BaselineKind kind) {
    switch (kind) {
        case BaselineKind::DistMult: return "distmult";
        case BaselineKind::ComplEx: return "complex";
        case BaselineKind::PRotatE: return "protate";
        case BaselineKind::RotatE: return "rotate";
        case BaselineKind::TransE: return "transe";
        case BaselineKind::FiveStar: return "5star";
    }
    return "unknown";
}

BaselineKind baseline_kind_from_string(const std::string& name) {
    if (name == "5star" || name == "fivestar") return BaselineKind::FiveStar;
    if (name == "transe") return BaselineKind::TransE;
    if (name == "complex") return BaselineKind::ComplEx;
    if (name == "distmult") return BaselineKind::DistMult;
    if (name == "rotate") return BaselineKind::RotatE;
    if (name == "protate") return BaselineKind::PRotatE;
    throw Error("unknown model kind: " + name);
}

ScoreVariant variant_for(BaselineKind kind) {
    switch (kind) {
        case BaselineKind::RotatE:
        case BaselineKind::TransE: return ScoreVariant::Distance;
        default: return ScoreVariant::InnerProduct;
    }
}

ConstraintMask mask_for(BaselineKind kind) {
    ConstraintMask m;
    switch (kind) {
        case BaselineKind::FiveStar:
            break;
        case BaselineKind::DistMult:
            m.entities = kFreezeIm;
            m.rel = {kFreezeIm, kFreezeBoth, kFreezeBoth, kFreezeBoth};
            break;
        case BaselineKind::ComplEx:
            m.rel = {0, kFreezeBoth, kFreezeBoth, kFreezeBoth};
            break;
        case BaselineKind::TransE:
            m.rel = {kFreezeBoth, kFreezeIm, kFreezeBoth, kFreezeBoth};
            break;
        case BaselineKind::RotatE:
        case BaselineKind::PRotatE:
            m.rel = {kFreezeBoth, kFreezeBoth, kFreezeBoth, kFreezeBoth};
            m.rel_a_phase = true;
            break;
    }
    return m;
}

void ModelParams::materialize_phases() {
    if (!mask.rel_a_phase) return;
    auto& a = rel[kRelA];
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = Complex(std::cos(rel_a_phase[k]), std::sin(rel_a_phase[k]));
    }
}

ModelParams init_params(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                        BaselineKind kind, std::uint64_t seed, double init_scale) {
    if (n_entities == 0 || n_relations == 0 || dim == 0) throw ShapeMismatch("init_params: sizes must be positive");
    ModelParams p;
    p.n_entities = n_entities;
    p.n_relations = n_relations;
    p.dim = dim;
    p.kind = kind;
    p.variant = variant_for(kind);
    p.mask = mask_for(kind);

    RandomEngine rng(seed);
    const std::size_t ne = n_entities * dim;
    const std::size_t nr = n_relations * dim;
    p.entities.resize(ne);
    for (auto& z : p.entities) z = rng.normal_complex(init_scale);
    if (p.mask.entities & kFreezeIm) {
        for (auto& z : p.entities) z = Complex(z.real(), 0.0);
    }

    constexpr double kRelNoise = 1e-3;
    for (auto& fam : p.rel) fam.resize(nr);
    if (p.mask.rel_a_phase) {
        p.rel_a_phase.resize(nr);
        for (auto& th : p.rel_a_phase) th = kRelNoise * rng.normal();
        p.materialize_phases();
    } else {
        for (auto& z : p.rel[kRelA]) z = Complex(1.0, 0.0) + rng.normal_complex(kRelNoise);
    }
    for (auto& z : p.rel[kRelB]) z = rng.normal_complex(kRelNoise);
    for (auto& z : p.rel[kRelC]) z = rng.normal_complex(kRelNoise);
    for (auto& z : p.rel[kRelD]) z = Complex(1.0, 0.0) + rng.normal_complex(kRelNoise);

    // Pin frozen entries at their constrained values.
    auto pin = [&](int family, Complex frozen_value) {
        const std::uint8_t f = p.mask.rel[family];
        if (f == 0) return;
        for (auto& z : p.rel[family]) {
            double re = (f & kFreezeRe) ? frozen_value.real() : z.real();
            double im = (f & kFreezeIm) ? frozen_value.imag() : z.imag();
            z = Complex(re, im);
        }
    };
    if (!p.mask.rel_a_phase) pin(kRelA, Complex(1.0, 0.0));
    pin(kRelB, Complex(0.0, 0.0));
    pin(kRelC, Complex(0.0, 0.0));
    pin(kRelD, Complex(1.0, 0.0));
    return p;
}

void transform_head(const ModelParams& p, std::uint32_t head, std::uint32_t relation,
                    std::span<Complex> out) {
    const std::size_t d = p.dim;
    const std::size_t hk = static_cast<std::size_t>(head) * d;
    const std::size_t rk = static_cast<std::size_t>(relation) * d;
    const Complex* a = p.rel[kRelA].data() + rk;
    const Complex* b = p.rel[kRelB].data() + rk;
    const Complex* c = p.rel[kRelC].data() + rk;
    const Complex* dd = p.rel[kRelD].data() + rk;
    const Complex* h = p.entities.data() + hk;
    for (std::size_t i = 0; i < d; ++i) {
        const Complex denom = clamp_denominator(c[i] * h[i] + dd[i]);
        out[i] = (a[i] * h[i] + b[i]) / denom;
    }
}

std::vector<Complex> transform_head(const ModelParams& p, std::uint32_t head, std::uint32_t relation) {
    std::vector<Complex> out(p.dim);
    transform_head(p, head, relation, out);
    return out;
}

double score_transformed(const ModelParams& p, std::span<const Complex> w, std::uint32_t tail) {
    const std::size_t d = p.dim;
    const Complex* t = p.entities.data() + static_cast<std::size_t>(tail) * d;
    if (p.variant == ScoreVariant::InnerProduct) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            s += w[i].real() * t[i].real() + w[i].imag() * t[i].imag();
        }
        return s;
    }
    if (p.norm == DistanceNorm::L2) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += std::norm(w[i] - t[i]);
        return -std::sqrt(s);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += std::abs(w[i] - t[i]);
    return -s;
}

double score(const ModelParams& p, const Triple& triple) {
    std::vector<Complex> w(p.dim);
    transform_head(p, triple.head, triple.relation, w);
    return score_transformed(p, w, triple.tail);
}

void score_all(const ModelParams& p, std::uint32_t head, std::uint32_t relation, std::span<double> out) {
    std::vector<Complex> w(p.dim);
    transform_head(p, head, relation, w);
    for (std::size_t j = 0; j < p.n_entities; ++j) {
        out[j] = score_transformed(p, w, static_cast<std::uint32_t>(j));
    }
}

std::vector<double> score_all(const ModelParams& p, std::uint32_t head, std::uint32_t relation) {
    std::vector<double> out(p.n_entities);
    score_all(p, head, relation, out);
    return out;
}

double min_abs_det(const ModelParams& p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = p.n_relations * p.dim;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex det = p.rel[kRelA][k] * p.rel[kRelD][k] - p.rel[kRelB][k] * p.rel[kRelC][k];
        best = std::min(best, std::abs(det));
    }
    return best;
}

namespace {

ModelParams constrained_shell(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                              BaselineKind kind) {
    ModelParams p;
    p.n_entities = n_entities;
    p.n_relations = n_relations;
    p.dim = dim;
    p.kind = kind;
    p.variant = variant_for(kind);
    p.mask = mask_for(kind);
    p.entities.assign(n_entities * dim, Complex(0.0));
    for (auto& fam : p.rel) fam.assign(n_relations * dim, Complex(0.0));
    // identity-map defaults; constructions overwrite what they use
    std::fill(p.rel[kRelA].begin(), p.rel[kRelA].end(), Complex(1.0, 0.0));
    std::fill(p.rel[kRelD].begin(), p.rel[kRelD].end(), Complex(1.0, 0.0));
    return p;
}

void require(bool ok, const char* what) {
    if (!ok) throw ShapeMismatch(what);
}

} // namespace

ModelParams from_distmult(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                          std::span<const double> entity_re, std::span<const double> rel_re) {
    require(entity_re.size() == n_entities * dim, "from_distmult: entity shape");
    require(rel_re.size() == n_relations * dim, "from_distmult: relation shape");
    ModelParams p = constrained_shell(n_entities, n_relations, dim, BaselineKind::DistMult);
    for (std::size_t k = 0; k < entity_re.size(); ++k) p.entities[k] = Complex(entity_re[k], 0.0);
    for (std::size_t k = 0; k < rel_re.size(); ++k) p.rel[kRelA][k] = Complex(rel_re[k], 0.0);
    return p;
}

ModelParams from_complex_baseline(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                                  std::span<const Complex> entities, std::span<const Complex> rel) {
    require(entities.size() == n_entities * dim, "from_complex_baseline: entity shape");
    require(rel.size() == n_relations * dim, "from_complex_baseline: relation shape");
    ModelParams p = constrained_shell(n_entities, n_relations, dim, BaselineKind::ComplEx);
    std::copy(entities.begin(), entities.end(), p.entities.begin());
    std::copy(rel.begin(), rel.end(), p.rel[kRelA].begin());
    return p;
}

ModelParams from_protate(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                         std::span<const double> entity_phase, std::span<const double> rel_phase) {
    require(entity_phase.size() == n_entities * dim, "from_protate: entity shape");
    require(rel_phase.size() == n_relations * dim, "from_protate: relation shape");
    ModelParams p = constrained_shell(n_entities, n_relations, dim, BaselineKind::PRotatE);
    for (std::size_t k = 0; k < entity_phase.size(); ++k) {
        p.entities[k] = Complex(std::cos(entity_phase[k]), std::sin(entity_phase[k]));
    }
    p.rel_a_phase.assign(rel_phase.begin(), rel_phase.end());
    p.materialize_phases();
    return p;
}

ModelParams from_rotate(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                        std::span<const Complex> entities, std::span<const double> rel_phase) {
    require(entities.size() == n_entities * dim, "from_rotate: entity shape");
    require(rel_phase.size() == n_relations * dim, "from_rotate: relation shape");
    ModelParams p = constrained_shell(n_entities, n_relations, dim, BaselineKind::RotatE);
    std::copy(entities.begin(), entities.end(), p.entities.begin());
    p.rel_a_phase.assign(rel_phase.begin(), rel_phase.end());
    p.materialize_phases();
    return p;
}

ModelParams from_transe(std::size_t n_entities, std::size_t n_relations, std::size_t dim,
                        std::span<const double> entity_re, std::span<const double> rel_re) {
    require(entity_re.size() == n_entities * dim, "from_transe: entity shape");
    require(rel_re.size() == n_relations * dim, "from_transe: relation shape");
    ModelParams p = constrained_shell(n_entities, n_relations, dim, BaselineKind::TransE);
    for (std::size_t k = 0; k < entity_re.size(); ++k) p.entities[k] = Complex(entity_re[k], 0.0);
    for (std::size_t k = 0; k < rel_re.size(); ++k) p.rel[kRelB][k] = Complex(rel_re[k], 0.0);
    return p;
}

} // namespace fivestar
