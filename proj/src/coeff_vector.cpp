#include "twisteq/coeff_vector.hpp"

#include <algorithm>
#include <cmath>

#include "twisteq/rep_model.hpp"

namespace twisteq {

CoeffVector CoeffVector::basis(const RepParams& params, int k) {
  CoeffVector v(params);
  v.set(k, Complex{1.0, 0.0});
  return v;
}

int CoeffVector::support_radius() const {
  int r = 0;
  for (const auto& [k, v] : entries_) r = std::max(r, std::abs(k));
  return r;
}

void CoeffVector::set(int k, Complex value) {
  if (!index_in_model(params_, k)) {
    throw ModelError("index " + std::to_string(k) + " outside the model index set");
  }
  if (value == Complex{0.0, 0.0}) {
    entries_.erase(k);
  } else {
    entries_[k] = value;
  }
}

CoeffVector& CoeffVector::add_scaled(const CoeffVector& other, Complex scale) {
  require_same_model(*this, other);
  for (const auto& [k, v] : other.entries_) add(k, scale * v);
  return *this;
}

CoeffVector CoeffVector::operator*(Complex scale) const {
  CoeffVector out(params_);
  if (scale == Complex{0.0, 0.0}) return out;
  for (const auto& [k, v] : entries_) out.set(k, scale * v);
  return out;
}

CoeffVector CoeffVector::operator+(const CoeffVector& other) const {
  CoeffVector out = *this;
  out.add_scaled(other, Complex{1.0, 0.0});
  return out;
}

CoeffVector CoeffVector::operator-(const CoeffVector& other) const {
  CoeffVector out = *this;
  out.add_scaled(other, Complex{-1.0, 0.0});
  return out;
}

CoeffVector CoeffVector::pruned(double threshold) const {
  CoeffVector out(params_);
  for (const auto& [k, v] : entries_) {
    if (std::abs(v) > threshold) out.set(k, v);
  }
  return out;
}

double CoeffVector::max_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : entries_) m = std::max(m, std::abs(v));
  return m;
}

void require_same_model(const CoeffVector& a, const CoeffVector& b) {
  if (a.params() != b.params()) {
    throw ModelError("vectors belong to different representation models");
  }
}

}  // namespace twisteq
