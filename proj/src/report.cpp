#include "partid/report.hpp"

#include <stdexcept>

namespace partid {
namespace {

Json decimal_array(const std::vector<BigInt>& values) {
    Json arr = Json::array();
    for (const auto& v : values) {
        arr.push_back(v.get_str());
    }
    return arr;
}

BigInt parse_decimal(const Json& j) {
    BigInt v;
    if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("report: expected a decimal string, got " + j.dump());
    }
    return v;
}

}  // namespace

Json to_json(const VerificationReport& report) {
    Json j;
    j["identity"] = to_string(report.identity);
    j["set"] = report.set_label;
    j["alpha"] = report.alpha;
    j["N"] = report.max_n;
    j["all_equal"] = report.all_equal;
    if (report.exploration) {
        j["exploration"] = true;
    }
    Json records = Json::array();
    for (const auto& r : report.records) {
        Json rec;
        rec["n"] = r.n;
        rec["lhs"] = r.lhs.get_str();
        rec["rhs"] = r.rhs().get_str();
        rec["equal"] = r.equal;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport report;
    report.identity = parse_identity(j.at("identity").get<std::string>());
    report.set_label = j.at("set").get<std::string>();
    report.alpha = j.at("alpha").get<unsigned>();
    report.max_n = j.at("N").get<std::size_t>();
    report.all_equal = j.at("all_equal").get<bool>();
    report.exploration = j.value("exploration", false);
    for (const auto& rec : j.at("records")) {
        VerificationRecord r;
        r.n = rec.at("n").get<std::size_t>();
        r.lhs = parse_decimal(rec.at("lhs"));
        r.rhs_convolution = parse_decimal(rec.at("rhs"));
        r.equal = rec.at("equal").get<bool>();
        report.records.push_back(std::move(r));
    }
    return report;
}

Json to_json(const SolutionMatrix& matrix) {
    Json j;
    j["n"] = matrix.n;
    j["base"] = matrix.base;
    Json rows = Json::array();
    for (const auto& row : matrix.rows) {
        rows.push_back(row);
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const CountTable& table) {
    Json j;
    j["statistic"] = table.statistic.name();
    if (table.statistic.cap.is_unbounded()) {
        j["alpha"] = nullptr;
    } else {
        j["alpha"] = table.statistic.cap.limit();
    }
    j["set"] = table.set_label;
    j["max_n"] = table.max_n();
    j["values"] = decimal_array(table.values);
    return j;
}

Json to_json(const GammaTable& table) {
    Json j;
    j["statistic"] = "gamma";
    j["alpha"] = table.alpha;
    j["set"] = table.set_label;
    j["max_n"] = table.max_n();
    j["values"] = decimal_array(table.values);
    return j;
}

void write_plain(std::ostream& os, const VerificationReport& report) {
    os << "identity " << to_string(report.identity) << "  set " << report.set_label << "  alpha "
       << report.alpha << "  N " << report.max_n << "  mode " << to_string(report.mode) << '\n';
    if (report.exploration) {
        os << "expected-failure exploration (identity is only claimed for even alpha)\n";
    }
    os << "n\tlhs\trhs\tequal\n";
    for (const auto& r : report.records) {
        os << r.n << '\t' << r.lhs << '\t' << r.rhs() << '\t' << (r.equal ? "yes" : "NO") << '\n';
    }
    os << "all_equal " << (report.all_equal ? "true" : "false") << '\n';
}

void write_csv(std::ostream& os, const VerificationReport& report) {
    os << "n,lhs,rhs,equal\n";
    for (const auto& r : report.records) {
        os << r.n << ',' << r.lhs << ',' << r.rhs() << ',' << (r.equal ? "true" : "false") << '\n';
    }
}

}  // namespace partid
