#pragma once

#include <map>

#include "twisteq/types.hpp"

namespace twisteq {

// Finitely supported vector sum_k f_k u_k over the weight basis of one model.
// Absent keys mean zero; inserting an exact zero erases the key, so the
// entry map is always the support. Entries iterate in ascending k.
class CoeffVector {
 public:
  explicit CoeffVector(const RepParams& params) : params_(params) {}

  static CoeffVector basis(const RepParams& params, int k);

  const RepParams& params() const { return params_; }
  const std::map<int, Complex>& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  int support_radius() const;  // max |k| over the support, 0 if empty

  Complex at(int k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
  }

  // Throws ModelError if k is not in the index set of the model.
  void set(int k, Complex value);
  void add(int k, Complex value) { set(k, at(k) + value); }

  // this += scale * other; models must agree.
  CoeffVector& add_scaled(const CoeffVector& other, Complex scale);

  CoeffVector operator*(Complex scale) const;
  CoeffVector operator+(const CoeffVector& other) const;
  CoeffVector operator-(const CoeffVector& other) const;

  // Drops entries with |value| <= threshold.
  CoeffVector pruned(double threshold) const;

  double max_abs() const;

  bool operator==(const CoeffVector& o) const {
    return params_ == o.params_ && entries_ == o.entries_;
  }

 private:
  RepParams params_;
  std::map<int, Complex> entries_;
};

void require_same_model(const CoeffVector& a, const CoeffVector& b);

}  // namespace twisteq
