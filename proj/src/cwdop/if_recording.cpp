#include "cwdop/if_recording.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "cwdop/parse_error.hpp"

namespace cwdop {

namespace {

constexpr char kHeader[] = "frame,sample,i,q";

// Shortest representation that parses back to the identical double; keeps
// re-writes byte-identical.
std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

struct ConfigField {
    const char* name;
    enum { kDouble, kInt } type;
    double RadarConfig::* d = nullptr;
    int RadarConfig::* i = nullptr;
};

// Alphabetical, fixed order on disk.
const ConfigField kConfigFields[] = {
    {"adc_bits", ConfigField::kInt, nullptr, &RadarConfig::adc_bits},
    {"adc_full_scale", ConfigField::kDouble, &RadarConfig::adc_full_scale, nullptr},
    {"adc_rate_sps", ConfigField::kDouble, &RadarConfig::adc_rate_sps, nullptr},
    {"baseband_gain", ConfigField::kDouble, &RadarConfig::baseband_gain, nullptr},
    {"carrier_freq", ConfigField::kDouble, &RadarConfig::carrier_freq, nullptr},
    {"frame_len", ConfigField::kInt, nullptr, &RadarConfig::frame_len},
    {"noise_figure_db", ConfigField::kDouble, &RadarConfig::noise_figure_db, nullptr},
    {"rcs_dbsm", ConfigField::kDouble, &RadarConfig::rcs_dbsm, nullptr},
    {"rx_bandwidth_hz", ConfigField::kDouble, &RadarConfig::rx_bandwidth_hz, nullptr},
    {"rx_gain_dbi", ConfigField::kDouble, &RadarConfig::rx_gain_dbi, nullptr},
    {"tx_gain_dbi", ConfigField::kDouble, &RadarConfig::tx_gain_dbi, nullptr},
    {"tx_power_dbm", ConfigField::kDouble, &RadarConfig::tx_power_dbm, nullptr},
};

[[noreturn]] void fail_row(std::size_t row, const std::string& msg) {
    throw ParseError("recording row " + std::to_string(row) + ": " + msg);
}

long long parse_ll(const std::string& text, std::size_t row, const char* what) {
    long long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        fail_row(row, std::string("malformed ") + what + " '" + text + "'");
    return value;
}

}  // namespace

void write_if_recording(const QuantizedFrames& frames, std::ostream& out) {
    for (const auto& field : kConfigFields) {
        out << "# " << field.name << '=';
        if (field.type == ConfigField::kDouble)
            out << format_double(frames.config.*(field.d));
        else
            out << frames.config.*(field.i);
        out << '\n';
    }
    out << kHeader << '\n';
    for (std::size_t f = 0; f < frames.frames.size(); ++f)
        for (std::size_t s = 0; s < frames.frames[f].size(); ++s) {
            const auto& code = frames.frames[f][s];
            out << f << ',' << s << ',' << code.i << ',' << code.q << '\n';
        }
}

void write_if_recording(const QuantizedFrames& frames, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_if_recording(frames, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

QuantizedFrames read_if_recording(std::istream& in) {
    QuantizedFrames out;
    std::map<std::string, std::string> header;
    std::string line;
    std::size_t row = 0;

    // Config comment block, then the column header.
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            const auto start = body.find_first_not_of(' ');
            if (start == std::string::npos) fail_row(row, "empty config comment");
            body = body.substr(start);
            const auto eq = body.find('=');
            if (eq == std::string::npos) fail_row(row, "config comment is not key=value");
            if (!header.emplace(body.substr(0, eq), body.substr(eq + 1)).second)
                fail_row(row, "duplicate config key '" + body.substr(0, eq) + "'");
            continue;
        }
        if (line != kHeader) fail_row(row, "expected '" + std::string(kHeader) + "' header");
        break;
    }

    for (const auto& field : kConfigFields) {
        const auto it = header.find(field.name);
        if (it == header.end())
            throw ParseError(std::string("recording header missing '") + field.name + "'");
        if (field.type == ConfigField::kDouble) {
            std::size_t consumed = 0;
            double value = 0.0;
            try {
                value = std::stod(it->second, &consumed);
            } catch (const std::exception&) {
                consumed = std::string::npos;
            }
            if (consumed != it->second.size())
                throw ParseError(std::string("recording header '") + field.name +
                                 "' is not a number: " + it->second);
            out.config.*(field.d) = value;
        } else {
            out.config.*(field.i) =
                static_cast<int>(parse_ll(it->second, row, field.name));
        }
        header.erase(it);
    }
    if (!header.empty())
        throw ParseError("recording header has unknown key '" + header.begin()->first + "'");

    const auto config_errors = validate_config(out.config);
    if (!config_errors.empty()) {
        std::string msg = "recording header config invalid:";
        for (const auto& e : config_errors) msg += " [" + e + "]";
        throw ParseError(msg);
    }

    const auto frame_len = static_cast<std::size_t>(out.config.frame_len);
    const std::int64_t code_max = (std::int64_t{1} << (out.config.adc_bits - 1)) - 1;
    const std::int64_t code_min = -(std::int64_t{1} << (out.config.adc_bits - 1));

    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string fields[4];
        std::size_t n_fields = 0;
        std::size_t start = 0;
        for (std::size_t pos = 0; pos <= line.size(); ++pos) {
            if (pos == line.size() || line[pos] == ',') {
                if (n_fields == 4) fail_row(row, "too many columns");
                fields[n_fields++] = line.substr(start, pos - start);
                start = pos + 1;
            }
        }
        if (n_fields != 4) fail_row(row, "expected 4 columns");
        const long long frame = parse_ll(fields[0], row, "frame index");
        const long long sample = parse_ll(fields[1], row, "sample index");
        const long long i_code = parse_ll(fields[2], row, "i code");
        const long long q_code = parse_ll(fields[3], row, "q code");

        const auto expected_frame = static_cast<long long>(
            out.frames.empty() ? 0
                               : (out.frames.back().size() == frame_len
                                      ? out.frames.size()
                                      : out.frames.size() - 1));
        const auto expected_sample = static_cast<long long>(
            out.frames.empty() || out.frames.back().size() == frame_len
                ? 0
                : out.frames.back().size());
        if (frame != expected_frame || sample != expected_sample)
            fail_row(row, "non-contiguous indices: got frame " + std::to_string(frame) +
                              " sample " + std::to_string(sample) + ", expected frame " +
                              std::to_string(expected_frame) + " sample " +
                              std::to_string(expected_sample));
        if (i_code < code_min || i_code > code_max || q_code < code_min || q_code > code_max)
            fail_row(row, "code outside " + std::to_string(out.config.adc_bits) +
                              "-bit range [" + std::to_string(code_min) + ", " +
                              std::to_string(code_max) + "]");

        if (sample == 0) out.frames.emplace_back();
        out.frames.back().push_back(
            {static_cast<std::int32_t>(i_code), static_cast<std::int32_t>(q_code)});
    }

    if (out.frames.empty()) throw ParseError("recording has no frames");
    if (out.frames.back().size() != frame_len)
        throw ParseError("recording ends with an incomplete frame");
    return out;
}

QuantizedFrames read_if_recording_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open recording: " + path);
    return read_if_recording(in);
}

}  // namespace cwdop
