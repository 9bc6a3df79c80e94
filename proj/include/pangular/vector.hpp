#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pangular {

/// A point of R^n. Arithmetic between vectors of different dimension throws
/// ErrorCode::dimension_mismatch.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0) : coords_(n, fill) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }
  const std::vector<double>& data() const noexcept { return coords_; }

  bool is_finite() const noexcept;
  bool is_zero() const noexcept;
  double max_abs() const noexcept;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double c) noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator-(Vector v);
Vector operator*(double c, Vector v);

/// a*x + b*y without intermediate temporaries.
Vector lincomb(double a, const Vector& x, double b, const Vector& y);

void require_same_dimension(const Vector& x, const Vector& y);

}  // namespace pangular
