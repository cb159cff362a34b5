#pragma once

#include <cstdint>

namespace noir {

// Numerical guards around the log-ratio score. epsilon_d floors the
// similarity before taking its logarithm so unrelated pairs (cosine near or
// below zero) map to a small positive score instead of an undefined one.
// m_cap bounds the score magnitude when the similarity approaches 1, where
// the denominator log vanishes.
struct MetricConfig {
    double epsilon_d = 0.01;   // similarity floor, in (0, 0.1]
    double m_cap = 1000.0;     // saturation cap on |score|
};

// Margin below 1 at which the similarity is clamped for the denominator log.
inline constexpr double kUpperClampMargin = 1e-6;

// Token compression ratio of a (text, summary) pair. value is the exact real
// quotient tokens_summary / tokens_text.
struct CompressionRatio {
    double value = 0.0;
    std::uint64_t tokens_summary = 0;
    std::uint64_t tokens_text = 0;
};

// Cosine similarity with its floored companion. clamped keeps raw inside
// [epsilon_d, 1] so logarithms stay defined.
struct SimilarityScore {
    double raw = 0.0;
    double clamped = 0.0;
};

// A score value together with the power applied to the log-compression
// numerator (1 for the canonical score) and a flag recording that the
// similarity floor, upper clamp, or magnitude cap modified or degraded the
// result.
struct NoirScore {
    double value = 0.0;
    double power_p = 1.0;
    bool saturated = false;
};

// Throws ZeroTokens when either count is zero.
CompressionRatio compression_ratio(std::uint64_t tokens_summary, std::uint64_t tokens_text);

// Clamps |raw| <= 1 rounding drift; raw further outside throws std::invalid_argument.
SimilarityScore make_similarity(double raw, const MetricConfig& cfg = {});

// ln(ratio) / ln(similarity), with the similarity floored at cfg.epsilon_d,
// clamped below 1 by kUpperClampMargin, and the magnitude capped at
// cfg.m_cap. A ratio of exactly 1 scores 0 regardless of similarity.
// Positive for compression, negative for expansion.
NoirScore noir_score(const CompressionRatio& ratio, const SimilarityScore& similarity,
                     const MetricConfig& cfg = {});

// Generalized form sign(-ln ratio) * |ln ratio|^p / |ln similarity|.
// Reduces to noir_score bitwise at p = 1. Throws PowerOutOfRange unless
// p is in [0, 2].
NoirScore noir_score_powered(const CompressionRatio& ratio, const SimilarityScore& similarity,
                             double p, const MetricConfig& cfg = {});

// Multiplicative similarity retained per halving of token count implied by a
// positive score: exp(-ln 2 / value). Inverse of noir_score at ratio 0.5.
// Throws NonPositiveScore for value <= 0.
SimilarityScore degradation_per_halving(const NoirScore& noir, const MetricConfig& cfg = {});

}  // namespace noir
