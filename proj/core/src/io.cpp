#include "berge/io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace berge::io {

OutputFormat parse_format(const std::string& name) {
    if (name == "json-lines") return OutputFormat::JsonLines;
    if (name == "csv") return OutputFormat::Csv;
    throw InvalidParameterError("unknown output format: " + name);
}

std::string report_line(const verify::CongruenceReport& report) {
    std::ostringstream os;
    const auto& rec = report.record;
    os << "family=" << families::family_name(rec.family);
    os << " params=";
    for (std::size_t i = 0; i < rec.params.size(); ++i) {
        if (i) os << ",";
        os << rec.params[i];
    }
    os << " p=" << rec.p;
    os << " chi_neg=" << rec.chi_neg;
    os << " candidates=";
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const auto& c = report.candidates[i];
        if (i) os << ",";
        os << c.a.value() << ":" << c.residual.value() << ":" << (c.holds ? 1 : 0);
    }
    os << " classification=" << verify::classification_name(report.classification);
    os << " notes=";
    for (std::size_t i = 0; i < rec.notes.size(); ++i) {
        if (i) os << ";";
        os << rec.notes[i];
    }
    return os.str();
}

std::string report_json(const verify::CongruenceReport& report) {
    nlohmann::ordered_json j;
    const auto& rec = report.record;
    j["family"] = families::family_name(rec.family);
    j["params"] = rec.params;
    j["p"] = rec.p;
    j["chi_neg"] = rec.chi_neg;
    nlohmann::ordered_json cands = nlohmann::ordered_json::array();
    for (const auto& c : report.candidates) {
        nlohmann::ordered_json e;
        e["a"] = c.a.value();
        e["residual"] = c.residual.value();
        e["holds"] = c.holds;
        cands.push_back(std::move(e));
    }
    j["candidates"] = std::move(cands);
    j["classification"] = verify::classification_name(report.classification);
    return j.dump();
}

namespace {

std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

} // namespace

std::string csv_header() {
    return "family,params,p,chi_neg,a,residual,holds,classification";
}

std::string report_csv_rows(const verify::CongruenceReport& report) {
    const auto& rec = report.record;
    std::string params;
    for (std::size_t i = 0; i < rec.params.size(); ++i) {
        if (i) params += ";";
        params += std::to_string(rec.params[i]);
    }
    std::ostringstream os;
    for (const auto& c : report.candidates) {
        os << families::family_name(rec.family) << "," << csv_quote(params) << "," << rec.p << ","
           << rec.chi_neg << "," << c.a.value() << "," << c.residual.value() << ","
           << (c.holds ? "true" : "false") << ","
           << verify::classification_name(report.classification) << "\n";
    }
    return os.str();
}

ReportWriter::ReportWriter(std::ostream& os, OutputFormat format) : os_(os), format_(format) {}

void ReportWriter::write(const verify::CongruenceReport& report) {
    if (format_ == OutputFormat::JsonLines) {
        os_ << report_json(report) << "\n";
    } else {
        if (!header_written_) {
            os_ << csv_header() << "\n";
            header_written_ = true;
        }
        os_ << report_csv_rows(report);
    }
}

std::string sweep_to_string(const verify::SweepSpec& spec, int jobs, OutputFormat format) {
    std::ostringstream os;
    ReportWriter writer(os, format);
    verify::sweep(spec, jobs, [&](const verify::CongruenceReport& r) { writer.write(r); });
    return os.str();
}

} // namespace berge::io
