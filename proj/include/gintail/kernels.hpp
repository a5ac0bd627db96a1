#pragma once

namespace gintail::kernels {

// log of the diagonal correlation kernel of the complex ensemble,
//   K_n(z, z) = (n / pi) Q(n, n |z|^2),
// the density of eigenvalues with respect to Lebesgue measure on the plane.
double log_k_complex(int n, double re, double im);

// log of the complex-eigenvalue intensity of the real ensemble at z, the
// density of upper-half-plane eigenvalues (one per conjugate pair):
//   S_n(z) = sqrt(2) n^{3/2} |Im z| / sqrt(pi)
//            * erfcx(sqrt(2n) |Im z|) * Q(n-1, n |z|^2).
// Requires n >= 2; returns -inf on the real line.
double log_s_cc(int n, double re, double im);

// log of the real-eigenvalue line intensity of the real ensemble:
//   S_n(x) = sqrt(n / 2pi) Q(n-1, n x^2)
//          + (n^{n/2} |x|^{n-1} e^{-n x^2 / 2}) / (2^{n/2} Gamma(n/2))
//            * P((n-1)/2, n x^2 / 2).
// Requires n >= 3.
double log_s_rr(int n, double x);

// Quadrature route for the total masses.  complex_kernel_mass integrates K
// over the plane (exact value: n); real_line_mass integrates S over the real
// line (the expected number of real eigenvalues, ~ sqrt(2n/pi)).
double complex_kernel_mass(int n, double rel_tol = 1e-10);
double real_line_mass(int n, double rel_tol = 1e-10);

// Expected exceedance counts by direct 2D/1D quadrature of the intensities.
// Every integral is truncated at a radius where an analytic bound certifies
// the discarded tail is below rel_tol of the computed value; numerical_error
// otherwise.  Results are logs of expected counts.

// complex ensemble: E #{ |lambda| >= t }
double log_radial_count_complex(int n, double t, double rel_tol = 1e-10);
// complex ensemble: E #{ Re lambda >= t }
double log_rightmost_count_complex(int n, double t, double rel_tol = 1e-9);
// real ensemble: E #{ real lambda >= t }, t > 0
double log_real_count_right(int n, double t, double rel_tol = 1e-9);
// real ensemble: E #{ conjugate pairs with |lambda| >= t }
double log_pair_count_radius(int n, double t, double rel_tol = 1e-9);
// real ensemble: E #{ conjugate pairs with Re lambda >= t }, t > 0
double log_pair_count_rightmost(int n, double t, double rel_tol = 1e-9);

}  // namespace gintail::kernels
