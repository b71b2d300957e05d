#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "berge/io.hpp"

using namespace berge;
using namespace berge::io;

namespace {

verify::CongruenceReport sample_report() {
    return verify::classify(families::type_I(2, 3, +1));
}

} // namespace

TEST_CASE("json line shape") {
    std::string line = report_json(sample_report());
    // Keys in declared order, one object per line.
    CHECK(line.find("{\"family\":\"I\",\"params\":[2,3,1],\"p\":7,\"chi_neg\":1,\"candidates\":") == 0);
    CHECK(line.find("\"a\":3,\"residual\":0,\"holds\":true") != std::string::npos);
    CHECK(line.find("\"a\":4,\"residual\":3,\"holds\":false") != std::string::npos);
    CHECK(line.find("\"classification\":\"expected-torus\"") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("json round-trips the report values") {
    verify::CongruenceReport rep = sample_report();
    nlohmann::json j = nlohmann::json::parse(report_json(rep));
    CHECK(j["family"] == "I");
    CHECK(j["params"] == std::vector<i64>(rep.record.params));
    CHECK(j["p"] == rep.record.p);
    CHECK(j["chi_neg"] == rep.record.chi_neg);
    REQUIRE(j["candidates"].size() == rep.candidates.size());
    for (std::size_t n = 0; n < rep.candidates.size(); ++n) {
        CHECK(j["candidates"][n]["a"] == rep.candidates[n].a.value());
        CHECK(j["candidates"][n]["residual"] == rep.candidates[n].residual.value());
        CHECK(j["candidates"][n]["holds"] == rep.candidates[n].holds);
    }
    CHECK(j["classification"] == verify::classification_name(rep.classification));
}

TEST_CASE("csv rows") {
    CHECK(csv_header() == "family,params,p,chi_neg,a,residual,holds,classification");
    std::string rows = report_csv_rows(sample_report());
    CHECK(rows == "I,2;3;1,7,1,3,0,true,expected-torus\nI,2;3;1,7,1,4,3,false,expected-torus\n");
}

TEST_CASE("report line") {
    std::string line = report_line(sample_report());
    CHECK(line.find("family=I params=2,3,1 p=7 chi_neg=1 candidates=3:0:1,4:3:0 "
                    "classification=expected-torus") == 0);
}

TEST_CASE("csv and json carry identical values") {
    verify::SweepSpec spec;
    spec.family = verify::Family::IX;
    spec.j = {-6, 6};
    std::ostringstream json_os, csv_os;
    ReportWriter jw(json_os, OutputFormat::JsonLines);
    ReportWriter cw(csv_os, OutputFormat::Csv);
    verify::sweep(spec, 1, [&](const verify::CongruenceReport& r) {
        jw.write(r);
        cw.write(r);
    });
    // Count data rows: one JSON line per record, one CSV row per candidate.
    i64 json_lines = 0;
    for (char ch : json_os.str())
        if (ch == '\n') ++json_lines;
    i64 csv_lines = 0;
    for (char ch : csv_os.str())
        if (ch == '\n') ++csv_lines;
    CHECK(json_lines == 11);      // j in [-6,6] minus {0,-1}, one line each
    CHECK(csv_lines == 1 + 2 * json_lines);
}

TEST_CASE("format parsing") {
    CHECK(parse_format("json-lines") == OutputFormat::JsonLines);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), InvalidParameterError);
}
