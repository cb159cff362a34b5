#include "noir/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "noir/errors.hpp"

namespace noir {

CompressionRatio compression_ratio(std::uint64_t tokens_summary, std::uint64_t tokens_text) {
    if (tokens_summary == 0 || tokens_text == 0) {
        throw ZeroTokens("token counts must be positive, got summary=" +
                         std::to_string(tokens_summary) + " text=" + std::to_string(tokens_text));
    }
    return CompressionRatio{static_cast<double>(tokens_summary) / static_cast<double>(tokens_text),
                            tokens_summary, tokens_text};
}

SimilarityScore make_similarity(double raw, const MetricConfig& cfg) {
    if (!(std::abs(raw) <= 1.0 + 1e-9)) {
        throw std::invalid_argument("similarity out of [-1, 1]: " + std::to_string(raw));
    }
    raw = std::clamp(raw, -1.0, 1.0);
    return SimilarityScore{raw, std::clamp(raw, cfg.epsilon_d, 1.0)};
}

namespace {

// Shared clamp/cap logic. The raw similarity is floored at epsilon_d and kept
// below 1 by kUpperClampMargin before the log; the near-perfect band
// [1 - epsilon_d, 1] is flagged saturated because the score there is dominated
// by the guards rather than the data.
struct ClampedDenominator {
    double d_log;
    bool flagged;
};

ClampedDenominator clamp_similarity(double raw, const MetricConfig& cfg) {
    const double floored = std::max(raw, cfg.epsilon_d);
    const double d_log = std::min(floored, 1.0 - kUpperClampMargin);
    const bool flagged = raw < cfg.epsilon_d || raw >= 1.0 - cfg.epsilon_d;
    return {d_log, flagged};
}

NoirScore cap_magnitude(double value, bool flagged, double p, const MetricConfig& cfg) {
    if (std::abs(value) > cfg.m_cap) {
        value = std::copysign(cfg.m_cap, value);
        flagged = true;
    }
    return NoirScore{value, p, flagged};
}

}  // namespace

NoirScore noir_score(const CompressionRatio& ratio, const SimilarityScore& similarity,
                     const MetricConfig& cfg) {
    if (ratio.value == 1.0) {
        return NoirScore{0.0, 1.0, false};
    }
    const auto [d_log, flagged] = clamp_similarity(similarity.raw, cfg);
    return cap_magnitude(std::log(ratio.value) / std::log(d_log), flagged, 1.0, cfg);
}

NoirScore noir_score_powered(const CompressionRatio& ratio, const SimilarityScore& similarity,
                             double p, const MetricConfig& cfg) {
    if (!(p >= 0.0 && p <= 2.0)) {
        throw PowerOutOfRange("power must be in [0, 2], got " + std::to_string(p));
    }
    if (ratio.value == 1.0) {
        return NoirScore{0.0, p, false};
    }
    const auto [d_log, flagged] = clamp_similarity(similarity.raw, cfg);
    const double log_ratio = std::log(ratio.value);
    // sign(-ln r) * |ln r|^p / |ln d|; identical to ln r / ln d at p = 1.
    const double magnitude = std::pow(std::abs(log_ratio), p) / std::abs(std::log(d_log));
    const double value = log_ratio < 0.0 ? magnitude : -magnitude;
    return cap_magnitude(value, flagged, p, cfg);
}

SimilarityScore degradation_per_halving(const NoirScore& noir, const MetricConfig& cfg) {
    if (!(noir.value > 0.0)) {
        throw NonPositiveScore("degradation per halving needs a positive score, got " +
                               std::to_string(noir.value));
    }
    return make_similarity(std::exp(-std::log(2.0) / noir.value), cfg);
}

}  // namespace noir
