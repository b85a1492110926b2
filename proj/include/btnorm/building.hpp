#pragma once

// Apartments of the diagonal torus and of explicit frames, relative position,
// parahoric types, and the Bruhat-Tits tree of GL_2.
//
// Sign convention for the torus action: t = diag(t_1, ..., t_n) translates the
// apartment by (val(t_1), ..., val(t_n)). For p = 2 and t = diag(4, 1):
//   theta_x has c(e_1) = x_1, and (t . theta_x)(e_1) = theta_x(e_1 / 4) = x_1 + 2,
// so apartment_coords(act(t, theta_x)) = x + (2, 0).

#include <optional>
#include <vector>

#include "btnorm/norms.hpp"

namespace btnorm {

struct ApartmentPoint {
  Vector coords;
  friend bool operator==(const ApartmentPoint&, const ApartmentPoint&) = default;
};

SplitNorm norm_from_apartment(const ApartmentPoint& x, const FieldConfig& cfg);

/// Coordinates of norm in the apartment of frame (columns), or nullopt when the
/// frame does not split the norm.
std::optional<ApartmentPoint> apartment_coords(const SplitNorm& norm, const Matrix& frame);

Vector torus_translation(const Matrix& t, const FieldConfig& cfg);

/// b-value minus a-value on a common splitting basis, sorted descending.
Vector cartan_position(const SplitNorm& a, const SplitNorm& b);

/// Value-class multiplicities ordered by class in [0, 1). A single part means
/// hyperspecial; n parts means Iwahori.
std::vector<size_t> point_type(const SplitNorm& norm);

/// The norm v -> c(v) + shift.
SplitNorm shift(const SplitNorm& norm, const Rational& amount);

/// Equal up to an integer shift, i.e. the same homothety class of lattice chains.
bool homothetic(const SplitNorm& a, const SplitNorm& b);

/// The p + 1 neighbours of a vertex of the GL_2 tree: the lattice norms of the
/// index-p sublattices of the vertex lattice, shifted by the vertex's class.
std::vector<SplitNorm> tree_neighbors(const SplitNorm& vertex);

}  // namespace btnorm
