#pragma once

// Umbrella header: lower bounds for the least eigenvalue of the conformal
// Laplacian and for the Yamabe invariant of a closed manifold, computed from
// summary curvature data through comparison on the round sphere.

#include "conflap/bounds.hpp"
#include "conflap/catalog.hpp"
#include "conflap/errors.hpp"
#include "conflap/isoperimetric_constant.hpp"
#include "conflap/json_io.hpp"
#include "conflap/manifold_summary.hpp"
#include "conflap/quadrature.hpp"
#include "conflap/radial_grid.hpp"
#include "conflap/radial_spectrum.hpp"
#include "conflap/rearrangement.hpp"
#include "conflap/roots.hpp"
#include "conflap/sphere_geometry.hpp"
#include "conflap/step_potential.hpp"
#include "conflap/tridiagonal.hpp"
#include "conflap/verify.hpp"
#include "conflap/yamabe.hpp"
