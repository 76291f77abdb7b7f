#ifndef SKEWPAIR_CSVIO_HPP
#define SKEWPAIR_CSVIO_HPP

#include <string>

#include "skewpair/planar.hpp"
#include "skewpair/sbbbm.hpp"

// CSV and file output. Floats are printed with 17 significant digits and a '.'
// decimal separator regardless of environment; files are written atomically
// (temp file + rename).

namespace skewpair {

/// Locale-independent float formatting with 17 significant digits.
std::string format_double(double x);

/// Writes content to path via a temporary file and rename.
void atomic_write_file(const std::string& path, const std::string& content);

/// Gap-path CSV with mandatory header `t,y,lhat`.
void write_sbbbm_csv(const std::string& path, const SbbbmPath& sb);

/// Planar-path CSV with header `t,x1,x2,r1,r2,lcol`.
void write_planar_csv(const std::string& path, const PlanarPath& pp);

/// Figure-scenario CSV with header `t,x1,x2`.
void write_figure_csv(const std::string& path, const PlanarPath& pp);

}  // namespace skewpair

#endif
