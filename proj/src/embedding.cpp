#include "cpdetect/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "cpdetect/errors.hpp"

namespace cpd {

EmbeddingVector::EmbeddingVector(std::vector<double> values, bool unit_norm)
    : values_(std::move(values)), unit_norm_(unit_norm) {
  if (values_.empty()) {
    throw InvalidEmbedding("embedding must have dim >= 1");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw InvalidEmbedding("embedding contains a non-finite value");
    }
  }
  if (unit_norm_) {
    const double n = l2_norm(values_);
    if (std::abs(n - 1.0) > kUnitNormTolerance) {
      throw InvalidEmbedding("embedding flagged unit-norm has norm " +
                             std::to_string(n));
    }
  }
}

double l2_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("cosine: dims " + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()));
  }
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) {
    throw ZeroVector("cosine over a zero-norm vector");
  }
  const double value = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(value, -1.0, 1.0);
}

EmbeddingVector normalized(const EmbeddingVector& v) {
  const double n = l2_norm(v);
  if (n == 0.0) {
    throw ZeroVector("cannot normalize a zero vector");
  }
  std::vector<double> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / n;
  return EmbeddingVector(std::move(out), true);
}

EmbeddingVector component_mean(std::span<const EmbeddingVector> vectors) {
  if (vectors.empty()) {
    throw InvalidEmbedding("mean of an empty vector set");
  }
  const std::size_t dim = vectors.front().dim();
  std::vector<double> sum(dim, 0.0);
  for (const auto& v : vectors) {
    if (v.dim() != dim) {
      throw DimensionMismatch("mean over vectors of unequal dim");
    }
    for (std::size_t i = 0; i < dim; ++i) sum[i] += v[i];
  }
  const double inv = 1.0 / static_cast<double>(vectors.size());
  for (double& x : sum) x *= inv;
  return EmbeddingVector(std::move(sum));
}

}  // namespace cpd
