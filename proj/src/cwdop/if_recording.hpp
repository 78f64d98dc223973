#ifndef CWDOP_IF_RECORDING_HPP
#define CWDOP_IF_RECORDING_HPP

#include <iosfwd>
#include <string>

#include "cwdop/synth.hpp"

namespace cwdop {

// IF recording format: a leading comment block of `# key=value` lines
// holding the full RadarConfig, a `frame,sample,i,q` header, then one row of
// signed ADC codes per sample. write/read round-trips bit-exactly.
void write_if_recording(const QuantizedFrames& frames, std::ostream& out);
void write_if_recording(const QuantizedFrames& frames, const std::string& path);

QuantizedFrames read_if_recording(std::istream& in);
QuantizedFrames read_if_recording_file(const std::string& path);

}  // namespace cwdop

#endif
