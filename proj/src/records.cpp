#include "frogbounds/records.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace frogbounds {

std::string format_sig12(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
    if (res.ec != std::errc())
        throw std::runtime_error("format_sig12: to_chars failed");
    return std::string(buf, res.ptr);
}

namespace {

const char* kind_bounds = "bounds-row";
const char* kind_estimate = "estimate";
const char* kind_verification = "verification-item";

void json_field_str(std::ostream& os, const char* key, const std::string& value, bool first = false) {
    if (!first) os << ',';
    os << '"' << key << "\":\"" << value << '"';
}

void json_field_num(std::ostream& os, const char* key, const std::string& value) {
    os << ",\"" << key << "\":" << value;
}

}  // namespace

void write_bounds_csv_header(std::ostream& os, const std::vector<int>& n_samples) {
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "d,ub_original,ub_fmrt,pbar,vbar,residual_Q,residual_R";
    for (const int n : n_samples) os << ",pbar_n_" << n;
    os << "\n";
}

void write_bounds_row_csv(std::ostream& os, const BoundsRow& row) {
    os << row.d << ',' << format_sig12(row.ub_original) << ',' << format_sig12(row.ub_fmrt) << ','
       << format_sig12(row.pbar) << ',' << format_sig12(row.vbar) << ','
       << format_sig12(row.residual_Q) << ',' << format_sig12(row.residual_R);
    for (const auto& [n, value] : row.pbar_n) os << ',' << format_sig12(value);
    os << "\n";
}

void write_bounds_row_json(std::ostream& os, const BoundsRow& row) {
    os << '{';
    json_field_str(os, "schema_version", kSchemaVersion, true);
    json_field_str(os, "kind", kind_bounds);
    json_field_num(os, "d", std::to_string(row.d));
    json_field_num(os, "ub_original", format_sig12(row.ub_original));
    json_field_num(os, "ub_fmrt", format_sig12(row.ub_fmrt));
    json_field_num(os, "pbar", format_sig12(row.pbar));
    json_field_num(os, "vbar", format_sig12(row.vbar));
    json_field_num(os, "residual_Q", format_sig12(row.residual_Q));
    json_field_num(os, "residual_R", format_sig12(row.residual_R));
    for (const auto& [n, value] : row.pbar_n)
        json_field_num(os, ("pbar_n_" + std::to_string(n)).c_str(), format_sig12(value));
    os << "}\n";
}

void write_estimate_csv_header(std::ostream& os) {
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "d,p,horizon,awake_cap,trials,seed,threads,successes,point,ci95_halfwidth\n";
}

void write_estimate_csv(std::ostream& os, const SimConfig& config, int threads,
                        const SurvivalEstimate& est) {
    os << config.d.value() << ',' << format_sig12(config.p.value()) << ',' << config.horizon << ','
       << config.awake_cap << ',' << est.trials << ',' << config.seed << ',' << threads << ','
       << est.successes << ',' << format_sig12(est.point) << ','
       << format_sig12(est.ci95_halfwidth) << "\n";
}

void write_estimate_json(std::ostream& os, const SimConfig& config, int threads,
                         const SurvivalEstimate& est) {
    os << '{';
    json_field_str(os, "schema_version", kSchemaVersion, true);
    json_field_str(os, "kind", kind_estimate);
    json_field_num(os, "d", std::to_string(config.d.value()));
    json_field_num(os, "p", format_sig12(config.p.value()));
    json_field_num(os, "horizon", std::to_string(config.horizon));
    json_field_num(os, "awake_cap", std::to_string(config.awake_cap));
    json_field_num(os, "trials", std::to_string(est.trials));
    json_field_num(os, "seed", std::to_string(config.seed));
    json_field_num(os, "threads", std::to_string(threads));
    json_field_num(os, "successes", std::to_string(est.successes));
    json_field_num(os, "point", format_sig12(est.point));
    json_field_num(os, "ci95_halfwidth", format_sig12(est.ci95_halfwidth));
    os << "}\n";
}

void write_verification_csv_header(std::ostream& os) {
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "name,pass,deviation,tolerance\n";
}

void write_verification_csv(std::ostream& os, const VerificationItem& item) {
    os << item.name << ',' << (item.pass ? "true" : "false") << ',' << format_sig12(item.deviation)
       << ',' << format_sig12(item.tolerance) << "\n";
}

void write_verification_json(std::ostream& os, const VerificationItem& item) {
    os << '{';
    json_field_str(os, "schema_version", kSchemaVersion, true);
    json_field_str(os, "kind", kind_verification);
    json_field_str(os, "name", item.name);
    os << ",\"pass\":" << (item.pass ? "true" : "false");
    json_field_num(os, "deviation", format_sig12(item.deviation));
    json_field_num(os, "tolerance", format_sig12(item.tolerance));
    os << "}\n";
}

}  // namespace frogbounds
