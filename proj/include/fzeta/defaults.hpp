#pragma once

// Every tunable default used by the library and the CLI lives here. Values are
// part of the reproducibility contract of the command-line tool; change them
// only together with the README table.

namespace fzeta::defaults {

// strings
inline constexpr int truncation_depth = 16;            // generations kept for recursive strings
inline constexpr double lattice_abscissa_tolerance = 1e-9;
inline constexpr double raw_abscissa_tolerance = 1e-4;

// zeta
inline constexpr double pole_exclusion_radius = 1e-12; // |1 - m r^s| below this is a pole hit
inline constexpr double contour_radius = 1e-3;
inline constexpr int contour_nodes = 64;
inline constexpr double residue_agreement = 1e-8;

// tube
inline constexpr int explicit_terms = 500;             // |n| <= N in the complex-dimension sum
inline constexpr int tube_grid_points = 50;
inline constexpr double tube_grid_min = 1e-4;
inline constexpr double tube_grid_max = 0.5;

// measures
inline constexpr int census_max_depth = 24;

// pzeta
inline constexpr int abscissa_max_n = 512;             // largest n in the growth-rate extrapolation
inline constexpr double abscissa_tolerance = 1e-6;
inline constexpr long log_domain_threshold = 10000;    // n*k2 above this: log-gamma binomials
inline constexpr int spectrum_max_denominator = 24;
inline constexpr int partition_zeta_terms = 200;

// mzeta
inline constexpr double pole_window_im = 15.0;

} // namespace fzeta::defaults
