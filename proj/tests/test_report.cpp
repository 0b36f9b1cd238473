#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "mpc/report.hpp"

using namespace mpc;

TEST_CASE("spectrum report content and serialization") {
    SymplecticSpace sp = SymplecticSpace::standard(1);
    SpectrumReport report = make_spectrum_report(sp, 1, 0, 2);
    REQUIRE(!report.rows.empty());
    CHECK(report.worst_residual < 1e-10);

    // Rows are ordered by (r, b, l).
    for (size_t i = 1; i < report.rows.size(); ++i) {
        const auto& a = report.rows[i - 1];
        const auto& b = report.rows[i];
        CHECK(std::tie(a.r, a.b, a.l) < std::tie(b.r, b.b, b.l));
    }

    std::string json_text = to_json(report);
    auto parsed = nlohmann::json::parse(json_text);
    CHECK(parsed["schema"] == "mpc-dirac-spectrum/1");
    CHECK(parsed["hbar"] == 1.0);
    CHECK(parsed["rows"].size() == report.rows.size());
    CHECK(parsed["rows"][0].contains("matrix_eigenvalue"));
    CHECK(parsed["rows"][0].contains("ker_d"));
    for (size_t i = 0; i < report.rows.size(); ++i) {
        CHECK(parsed["rows"][i]["closed_form"].get<double>() ==
              doctest::Approx(report.rows[i].closed_form).epsilon(1e-12));
    }

    std::string csv_text = to_csv(report);
    size_t lines = std::count(csv_text.begin(), csv_text.end(), '\n');
    CHECK(lines == report.rows.size() + 1);

    // Serialization is deterministic.
    CHECK(json_text == to_json(make_spectrum_report(sp, 1, 0, 2)));
    CHECK(csv_text == to_csv(make_spectrum_report(sp, 1, 0, 2)));
}

TEST_CASE("floating point fields keep full precision") {
    SpectrumReport report;
    SpectrumRow row{};
    row.n = 1;
    row.matrix_eigenvalue = 1.0 / 3.0;
    row.closed_form = 0.333333333333333314829616256247;
    report.rows.push_back(row);
    std::string text = to_json(report);
    CHECK(text.find("0.333333333333333") != std::string::npos);
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["rows"][0]["matrix_eigenvalue"].get<double>() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}
