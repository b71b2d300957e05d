#pragma once

#include <iosfwd>
#include <string>

#include "berge/verify.hpp"

namespace berge::io {

enum class OutputFormat { JsonLines, Csv };

OutputFormat parse_format(const std::string& name);

/// Record line format plus residual fields and the classification.
std::string report_line(const verify::CongruenceReport& report);

/// One JSON object per report; keys family, params, p, chi_neg,
/// candidates, classification in that order.
std::string report_json(const verify::CongruenceReport& report);

std::string csv_header();

/// One RFC-4180 row per (record, candidate).
std::string report_csv_rows(const verify::CongruenceReport& report);

/// Streams reports in the chosen format; CSV emits the header before the
/// first row. Output is byte-deterministic for a fixed report sequence.
class ReportWriter {
public:
    ReportWriter(std::ostream& os, OutputFormat format);
    void write(const verify::CongruenceReport& report);

private:
    std::ostream& os_;
    OutputFormat format_;
    bool header_written_ = false;
};

/// Runs a sweep and captures the full stream as a string; used by the
/// determinism checks.
std::string sweep_to_string(const verify::SweepSpec& spec, int jobs, OutputFormat format);

} // namespace berge::io
