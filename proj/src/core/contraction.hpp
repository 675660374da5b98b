#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/body.hpp"
#include "core/config.hpp"
#include "core/report.hpp"

namespace polarlab {

/// Bodies of a parametrized deformation together with named residuals per t.
struct HomotopyTrace {
  std::vector<double> t_values;  // strictly increasing
  std::vector<GridBody> bodies;
  std::vector<std::map<std::string, double>> residuals;
};

/// Truncation deformation: K for t = 0, K cap ((1-t)/t) B for t in (0, 1];
/// t = 1 collapses to {0}.
GridBody F_cap(const GridBody& k, double t);

/// Dilation deformation K + tB.
GridBody H_add(const GridBody& k, double t);

/// K cap ((1-t)/t)B + tB: lands in the compact-with-interior class for t > 0.
GridBody h_dense(const GridBody& a, double t);

/// (A + tB) cap ((1-t)/t)B; the identity at t = 0. For t at or above
/// (sqrt(5)-1)/2 the value is the ball ((1-t)/t)B for every A.
GridBody psi(const GridBody& a, double t);

/// Radial transform rho -> max(t, rho/(1 + t rho)) followed by a
/// convexification pass; contained in psi_t(A^polar)^polar.
GridBody kappa(const GridBody& a, double t);

/// Polar-equivariant contraction: A at t = 0, the unit ball at t = 1, and
/// the geometric mean of psi_t(A) and psi_t(A^polar)^polar between.
GridBody phi(const GridBody& a, double t, double tol, int max_iter = 200);

/// Outer bound phi_t(A) within A + (t/(1-t))B, checked per direction.
Report claim1_check(const GridBody& a, double t, const Config& cfg);

/// Largest admissible t ensuring d_AW(phi_t(A), A) < eps for every A:
/// 0.99 * min{1/2, eps/(eps+1), 1/(j+1), eps/j^2} with 1/(j+1) < eps <= 1/j.
double claim2_eta(double eps);

/// Samples t uniformly in (0, claim2_eta(eps)) and checks the Attouch-Wets
/// distance of phi_t(A) to A stays under eps.
Report claim2_check(const GridBody& a, double eps, int samples, const Config& cfg);

}  // namespace polarlab
