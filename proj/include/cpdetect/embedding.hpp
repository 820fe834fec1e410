#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cpd {

inline constexpr double kUnitNormTolerance = 1e-5;

// Fixed-dimension real vector produced by an encoder. Values are held in
// double precision; the on-disk embedding format narrows to 32-bit floats.
class EmbeddingVector {
 public:
  // Validates on construction: dim >= 1, all values finite, and when
  // `unit_norm` is set, | ||v|| - 1 | <= 1e-5.
  explicit EmbeddingVector(std::vector<double> values, bool unit_norm = false);

  std::size_t dim() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  bool unit_norm() const { return unit_norm_; }
  std::span<const double> span() const { return values_; }

 private:
  std::vector<double> values_;
  bool unit_norm_ = false;
};

double l2_norm(std::span<const double> v);
inline double l2_norm(const EmbeddingVector& v) { return l2_norm(v.span()); }

// Cosine similarity, accumulated in double precision and clamped to [-1, 1].
// Throws DimensionMismatch on unequal dims and ZeroVector when either input
// has zero norm (degenerate embeddings are a hard error, never similarity 0).
double cosine(std::span<const double> u, std::span<const double> v);
inline double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  return cosine(u.span(), v.span());
}

// Unit-length copy; throws ZeroVector on degenerate input.
EmbeddingVector normalized(const EmbeddingVector& v);

// Componentwise arithmetic mean. Deliberately not renormalized: cosine
// normalizes implicitly, so renormalization would be a no-op on the value.
EmbeddingVector component_mean(std::span<const EmbeddingVector> vectors);

}  // namespace cpd
