#include "edo/indicators.hpp"

#include "edo/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace edo {

namespace {

void check_sets(std::string_view op, std::span<const ObjectiveVector> reference,
                std::span<const ObjectiveVector> solutions) {
    if (reference.empty()) throw DomainError(std::string(op) + ": empty reference set");
    if (solutions.empty()) throw DomainError(std::string(op) + ": empty solution set");
    const std::size_t m = reference.front().size();
    for (const auto& r : reference) {
        if (r.size() != m) throw DomainError(std::string(op) + ": mixed dimensionality in reference set");
    }
    for (const auto& s : solutions) {
        if (s.size() != m) throw DomainError(std::string(op) + ": solution and reference dimensionality differ");
    }
}

std::vector<double> flatten(std::span<const ObjectiveVector> pts) {
    std::vector<double> out;
    out.reserve(pts.size() * (pts.empty() ? 0 : pts.front().size()));
    for (const auto& p : pts) out.insert(out.end(), p.values.begin(), p.values.end());
    return out;
}

} // namespace

std::string_view to_string(IndicatorKind kind) {
    switch (kind) {
    case IndicatorKind::HYP2D: return "HYP2D";
    case IndicatorKind::HYP: return "HYP";
    case IndicatorKind::IGD: return "IGD";
    case IndicatorKind::EPS: return "EPS";
    case IndicatorKind::DIS: return "DIS";
    }
    return "?";
}

IndicatorKind parse_indicator_kind(std::string_view name) {
    std::string s;
    for (char c : name) {
        if (c != '-' && c != '_') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (s == "HYP2D") return IndicatorKind::HYP2D;
    if (s == "HYP") return IndicatorKind::HYP;
    if (s == "IGD") return IndicatorKind::IGD;
    if (s == "EPS") return IndicatorKind::EPS;
    if (s == "DIS") return IndicatorKind::DIS;
    throw ConfigurationError("unknown indicator '" + std::string(name) + "'");
}

double igd(std::span<const ObjectiveVector> reference, std::span<const ObjectiveVector> solutions) {
    check_sets("igd", reference, solutions);
    const std::size_t m = reference.front().size();
    const std::vector<double> sol = flatten(solutions);
    const std::size_t ns = solutions.size();

    double sum = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ns; ++j) {
            const double* s = sol.data() + j * m;
            double d2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double diff = r[k] - s[k];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        sum += std::sqrt(best);
    }
    return sum / static_cast<double>(reference.size());
}

EpsSequence eps_sequence(std::span<const ObjectiveVector> reference,
                         std::span<const ObjectiveVector> solutions) {
    check_sets("eps_sequence", reference, solutions);
    const std::size_t m = reference.front().size();
    const std::vector<double> sol = flatten(solutions);
    const std::size_t ns = solutions.size();

    EpsSequence seq;
    seq.values.reserve(reference.size());
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ns; ++j) {
            const double* s = sol.data() + j * m;
            double worst = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < m; ++k) worst = std::max(worst, s[k] - r[k]);
            best = std::min(best, worst);
        }
        seq.values.push_back(best);
    }
    std::sort(seq.values.begin(), seq.values.end(), std::greater<>());
    return seq;
}

std::weak_ordering eps_compare(const EpsSequence& a, const EpsSequence& b) {
    if (a.values.size() != b.values.size()) {
        throw DomainError("eps_compare: sequences of length " + std::to_string(a.values.size()) + " and " +
                          std::to_string(b.values.size()));
    }
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] < b.values[i]) return std::weak_ordering::less;
        if (a.values[i] > b.values[i]) return std::weak_ordering::greater;
    }
    return std::weak_ordering::equivalent;
}

IndicatorSpec::IndicatorSpec(IndicatorKind kind, Orientation orientation, Transform transform,
                             std::size_t feature_dim, std::optional<ObjectiveVector> ref_point,
                             std::shared_ptr<const ReferenceSet> ref_set)
    : kind_(kind), orientation_(orientation), transform_(transform), feature_dim_(feature_dim),
      ref_point_(std::move(ref_point)), ref_set_(std::move(ref_set)) {
    validate();
}

void IndicatorSpec::validate() const {
    auto fail = [&](const std::string& why) {
        throw ConfigurationError("indicator " + std::string(to_string(kind_)) + ": " + why);
    };
    if (feature_dim_ < 1) fail("feature dimension must be positive");
    const std::size_t m = transformed_dimension(transform_, feature_dim_);

    switch (kind_) {
    case IndicatorKind::HYP2D:
        if (feature_dim_ != 2) fail("requires a feature pair");
        if (transform_ != Transform::PlaneEmbed) fail("requires the plane embedding");
        if (orientation_ != Orientation::Maximize) fail("is maximized");
        if (!ref_point_ || ref_set_) fail("requires a reference point only");
        break;
    case IndicatorKind::HYP:
        if (transform_ != Transform::DimensionDouble) fail("requires dimension doubling");
        if (orientation_ != Orientation::Minimize) fail("is minimized in the doubled space");
        if (!ref_point_ || ref_set_) fail("requires a reference point only");
        break;
    case IndicatorKind::IGD:
        if (transform_ != Transform::Identity) fail("uses the identity transform");
        if (orientation_ != Orientation::Minimize) fail("is minimized");
        if (!ref_set_ || ref_point_) fail("requires a reference set only");
        break;
    case IndicatorKind::EPS:
        if (feature_dim_ != 2) fail("requires a feature pair");
        if (transform_ != Transform::PlaneEmbed) fail("requires the plane embedding");
        if (orientation_ != Orientation::Minimize) fail("is minimized");
        if (!ref_set_ || ref_point_) fail("requires a reference set only");
        break;
    case IndicatorKind::DIS:
        if (transform_ != Transform::Identity) fail("uses the identity transform");
        if (orientation_ != Orientation::Minimize) fail("is minimized");
        if (ref_set_ || ref_point_) fail("takes no reference data");
        if (feature_dim_ > 3) fail("supports d <= 3");
        break;
    }
    if (ref_point_ && ref_point_->size() != m) fail("reference point dimension mismatch");
    if (ref_set_) {
        if (ref_set_->points.empty()) fail("empty reference set");
        for (const auto& p : ref_set_->points) {
            if (p.size() != m) fail("reference set dimension mismatch");
        }
    }
}

IndicatorSpec IndicatorSpec::hyp2d(std::size_t grid_k, double margin) {
    const auto embedded = transform_refset(grid(2, grid_k), Transform::PlaneEmbed);
    return IndicatorSpec(IndicatorKind::HYP2D, Orientation::Maximize, Transform::PlaneEmbed, 2,
                         derive_reference_point(embedded.points, margin), nullptr);
}

IndicatorSpec IndicatorSpec::hyp(std::size_t d) {
    return IndicatorSpec(IndicatorKind::HYP, Orientation::Minimize, Transform::DimensionDouble, d,
                         doubled_reference_point(d), nullptr);
}

IndicatorSpec IndicatorSpec::igd(std::size_t d, std::size_t grid_k) {
    if (grid_k == 0) grid_k = default_grid_resolution(d);
    return IndicatorSpec(IndicatorKind::IGD, Orientation::Minimize, Transform::Identity, d, std::nullopt,
                         std::make_shared<const ReferenceSet>(grid(d, grid_k)));
}

IndicatorSpec IndicatorSpec::eps(std::size_t grid_k) {
    return IndicatorSpec(IndicatorKind::EPS, Orientation::Minimize, Transform::PlaneEmbed, 2, std::nullopt,
                         std::make_shared<const ReferenceSet>(
                             transform_refset(grid(2, grid_k), Transform::PlaneEmbed)));
}

IndicatorSpec IndicatorSpec::dis(std::size_t d) {
    return IndicatorSpec(IndicatorKind::DIS, Orientation::Minimize, Transform::Identity, d, std::nullopt,
                         nullptr);
}

IndicatorSpec IndicatorSpec::make(IndicatorKind kind, std::size_t d) {
    switch (kind) {
    case IndicatorKind::HYP2D:
        if (d != 2) throw ConfigurationError("HYP2D requires a feature pair");
        return hyp2d();
    case IndicatorKind::HYP: return hyp(d);
    case IndicatorKind::IGD: return igd(d);
    case IndicatorKind::EPS:
        if (d != 2) throw ConfigurationError("EPS requires a feature pair");
        return eps();
    case IndicatorKind::DIS: return dis(d);
    }
    throw ConfigurationError("unknown indicator kind");
}

IndicatorValue evaluate_indicator(const IndicatorSpec& spec, std::span<const FeatureVector> population) {
    if (population.empty()) throw DomainError("evaluate_indicator: empty population");
    for (const auto& f : population) {
        if (f.size() != spec.feature_dimension()) {
            throw DomainError("evaluate_indicator: feature vector of dimension " + std::to_string(f.size()) +
                              ", indicator expects " + std::to_string(spec.feature_dimension()));
        }
    }
    if (spec.kind() == IndicatorKind::DIS) return star_discrepancy(population);

    std::vector<ObjectiveVector> objectives;
    objectives.reserve(population.size());
    for (const auto& f : population) objectives.push_back(apply_transform(spec.transform(), f));

    switch (spec.kind()) {
    case IndicatorKind::HYP2D:
    case IndicatorKind::HYP:
        return hypervolume(objectives, *spec.reference_point(), spec.orientation());
    case IndicatorKind::IGD: return igd(spec.reference_set()->points, objectives);
    case IndicatorKind::EPS: return eps_sequence(spec.reference_set()->points, objectives);
    case IndicatorKind::DIS: break;
    }
    throw ConfigurationError("unknown indicator kind");
}

Orientation goal(IndicatorKind kind) {
    return kind == IndicatorKind::HYP2D || kind == IndicatorKind::HYP ? Orientation::Maximize : Orientation::Minimize;
}

std::weak_ordering compare_indicator_values(const IndicatorSpec& spec, const IndicatorValue& a,
                                            const IndicatorValue& b) {
    if (spec.kind() == IndicatorKind::EPS) {
        return eps_compare(std::get<EpsSequence>(a), std::get<EpsSequence>(b));
    }
    const double x = std::get<double>(a);
    const double y = std::get<double>(b);
    if (x == y) return std::weak_ordering::equivalent;
    const bool a_better = goal(spec.kind()) == Orientation::Maximize ? x > y : x < y;
    return a_better ? std::weak_ordering::less : std::weak_ordering::greater;
}

double headline(const IndicatorValue& value) {
    if (const auto* seq = std::get_if<EpsSequence>(&value)) return seq->front();
    return std::get<double>(value);
}

} // namespace edo
