#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "minkval/rational.hpp"

namespace minkval {

struct PointTag {};
struct CovectorTag {};

/// Coordinate tuple tagged with the space it lives in. Points (elements of
/// V) and covectors (elements of V*) share a representation but not a type,
/// so a covector can never be handed to something that expects a point.
template <class Tag>
class Coordinates {
 public:
  Coordinates() = default;
  explicit Coordinates(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Coordinates(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Coordinates zero(int dim) { return Coordinates(std::vector<Rational>(static_cast<std::size_t>(dim))); }
  static Coordinates unit(int dim, int axis) {
    auto v = zero(dim);
    v.coords_[static_cast<std::size_t>(axis)] = 1;
    return v;
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
  }

  Coordinates& operator+=(const Coordinates& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Coordinates& operator-=(const Coordinates& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Coordinates& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend Coordinates operator+(Coordinates a, const Coordinates& b) { return a += b; }
  friend Coordinates operator-(Coordinates a, const Coordinates& b) { return a -= b; }
  friend Coordinates operator-(Coordinates a) { return a *= Rational(-1); }
  friend Coordinates operator*(const Rational& s, Coordinates a) { return a *= s; }
  friend Coordinates operator*(Coordinates a, const Rational& s) { return a *= s; }

  friend bool operator==(const Coordinates& a, const Coordinates& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Coordinates& a, const Coordinates& b) { return !(a == b); }
  /// Lexicographic order; used to canonicalize vertex lists.
  friend bool operator<(const Coordinates& a, const Coordinates& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }

 private:
  void check_dim(const Coordinates& o) const {
    if (o.dim() != dim()) throw DimensionError("coordinate tuples of different dimension");
  }

  std::vector<Rational> coords_;
};

using Point = Coordinates<PointTag>;
using Covector = Coordinates<CovectorTag>;

/// The canonical pairing <xi, x> in the fixed basis / dual basis.
inline Rational pair(const Covector& xi, const Point& x) {
  if (xi.dim() != x.dim()) throw DimensionError("pairing of covector and point of different dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < x.coords().size(); ++i) s += xi[i] * x[i];
  return s;
}

/// Reinterprets coordinates through the standard Euclidean identification.
template <class To, class From>
Coordinates<To> retag(const Coordinates<From>& v) {
  return Coordinates<To>(v.coords());
}

template <class Tag>
std::string to_string(const Coordinates<Tag>& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += to_string(v[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

}  // namespace minkval
