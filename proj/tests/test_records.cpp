#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "frogbounds/records.hpp"

using namespace frogbounds;

TEST_CASE("numbers render at 12 significant digits without locale noise") {
    CHECK_EQ(format_sig12(0.75), "0.75");
    CHECK_EQ(format_sig12(1.0), "1");
    CHECK_EQ(format_sig12(0.0), "0");
    CHECK_EQ(format_sig12(-0.5), "-0.5");
    CHECK_EQ(format_sig12(1.0 / 3.0), "0.333333333333");
    CHECK_EQ(format_sig12(0.902713290094181910), "0.902713290094");
    CHECK_EQ(format_sig12(1e-13), "1e-13");
    CHECK_EQ(format_sig12(1e-9), "1e-09");
    CHECK_EQ(format_sig12(1e15), "1e+15");
    CHECK_EQ(format_sig12(123456789012345.0), "1.23456789012e+14");
    CHECK_EQ(format_sig12(0.0001), "0.0001");
}

TEST_CASE("bounds table header names one column per sample") {
    std::ostringstream os;
    write_bounds_csv_header(os, {1, 2});
    CHECK_EQ(os.str(),
             "# schema_version=1\n"
             "d,ub_original,ub_fmrt,pbar,vbar,residual_Q,residual_R,pbar_n_1,pbar_n_2\n");
}

TEST_CASE("bounds row renders identically valued fields in both formats") {
    BoundsRow row;
    row.d = 2;
    row.ub_original = 0.75;
    row.ub_fmrt = 0.720836;
    row.pbar = 0.5;
    row.vbar = 0.25;
    row.pbar_n = {{1, 1.0}};
    row.residual_Q = 1e-13;
    row.residual_R = 0.0;

    std::ostringstream csv;
    write_bounds_row_csv(csv, row);
    CHECK_EQ(csv.str(), "2,0.75,0.720836,0.5,0.25,1e-13,0,1\n");

    std::ostringstream json;
    write_bounds_row_json(json, row);
    CHECK_EQ(json.str(),
             "{\"schema_version\":\"1\",\"kind\":\"bounds-row\",\"d\":2,"
             "\"ub_original\":0.75,\"ub_fmrt\":0.720836,\"pbar\":0.5,\"vbar\":0.25,"
             "\"residual_Q\":1e-13,\"residual_R\":0,\"pbar_n_1\":1}\n");
}

TEST_CASE("estimate rows carry the full run description") {
    SimConfig cfg(Degree(2), Probability(0.7));
    cfg.seed = 9;
    SurvivalEstimate est;
    est.trials = 100;
    est.successes = 25;
    est.point = 0.25;
    est.ci95_halfwidth = 0.05;

    std::ostringstream header;
    write_estimate_csv_header(header);
    CHECK_EQ(header.str(),
             "# schema_version=1\n"
             "d,p,horizon,awake_cap,trials,seed,threads,successes,point,ci95_halfwidth\n");

    std::ostringstream csv;
    write_estimate_csv(csv, cfg, 4, est);
    CHECK_EQ(csv.str(), "2,0.7,200,1000000,100,9,4,25,0.25,0.05\n");

    std::ostringstream json;
    write_estimate_json(json, cfg, 4, est);
    CHECK_EQ(json.str(),
             "{\"schema_version\":\"1\",\"kind\":\"estimate\",\"d\":2,\"p\":0.7,"
             "\"horizon\":200,\"awake_cap\":1000000,\"trials\":100,\"seed\":9,"
             "\"threads\":4,\"successes\":25,\"point\":0.25,\"ci95_halfwidth\":0.05}\n");
}

TEST_CASE("verification rows spell booleans out") {
    VerificationItem item;
    item.name = "alpha";
    item.pass = true;
    item.deviation = 1e-13;
    item.tolerance = 1e-9;

    std::ostringstream header;
    write_verification_csv_header(header);
    CHECK_EQ(header.str(), "# schema_version=1\nname,pass,deviation,tolerance\n");

    std::ostringstream csv;
    write_verification_csv(csv, item);
    CHECK_EQ(csv.str(), "alpha,true,1e-13,1e-09\n");

    item.pass = false;
    std::ostringstream json;
    write_verification_json(json, item);
    CHECK_EQ(json.str(),
             "{\"schema_version\":\"1\",\"kind\":\"verification-item\",\"name\":\"alpha\","
             "\"pass\":false,\"deviation\":1e-13,\"tolerance\":1e-09}\n");
}
