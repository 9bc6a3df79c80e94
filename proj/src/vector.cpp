#include "pangular/vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pangular/error.hpp"

namespace pangular {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::zero_vector: return "zero_vector";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::no_inner_product: return "no_inner_product";
    case ErrorCode::negative_radicand: return "negative_radicand";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::linear_dependence: return "linear_dependence";
    case ErrorCode::out_of_domain: return "out_of_domain";
    case ErrorCode::quadrature_failed: return "quadrature_failed";
    case ErrorCode::search_exhausted: return "search_exhausted";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

bool Vector::is_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double c) { return std::isfinite(c); });
}

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double c) { return c == 0.0; });
}

double Vector::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coords_) m = std::max(m, std::abs(c));
  return m;
}

void require_same_dimension(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "vectors of dimension " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " cannot be combined");
  }
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double c) noexcept {
  for (double& e : coords_) e *= c;
  return *this;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator-(Vector v) {
  for (double& e : v.coords()) e = -e;
  return v;
}
Vector operator*(double c, Vector v) { return v *= c; }

Vector lincomb(double a, const Vector& x, double b, const Vector& y) {
  require_same_dimension(x, y);
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

}  // namespace pangular
