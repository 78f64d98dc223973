#ifndef CWDOP_MAP_IO_HPP
#define CWDOP_MAP_IO_HPP

#include <iosfwd>
#include <string>

#include "cwdop/dsp.hpp"

namespace cwdop {

// CSV: first row is the velocity axis, each following row the magnitudes of
// one frame, time-ordered.
void write_velocity_map_csv(const VelocityMap& map, std::ostream& out);
void write_velocity_map_csv(const VelocityMap& map, const std::string& path);

// Binary PGM (P5) heatmap, one pixel per (frame, velocity bin), 8-bit.
// Magnitudes are log-compressed then min-max normalized per file; row 0 is
// frame 0.
void write_velocity_map_pgm(const VelocityMap& map, std::ostream& out);
void write_velocity_map_pgm(const VelocityMap& map, const std::string& path);

}  // namespace cwdop

#endif
