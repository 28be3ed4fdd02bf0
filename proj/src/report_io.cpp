#include "slk/report_io.hpp"

#include <ctime>
#include <ostream>

#include <json.hpp>

namespace slk {

namespace {

using json = nlohmann::ordered_json;

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

void write_class_sums(std::ostream& out, const std::vector<ClassSum>& rows,
                      const ReportOptions& opt) {
    if (opt.format == OutputFormat::Csv) {
        if (!opt.deterministic) out << "# generated " << now_utc() << "\n";
        out << "n,p,q,statistic,value\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.p << ',';
            if (r.q != 0) out << r.q;
            out << ',' << statistic_name(r.stat) << ',' << r.value << "\n";
        }
        return;
    }
    json doc;
    doc["format_version"] = 1;
    doc["kind"] = "sums";
    if (!opt.deterministic) doc["generated_at"] = now_utc();
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["p"] = r.p;
        if (r.q != 0) row["q"] = r.q; else row["q"] = nullptr;
        row["statistic"] = statistic_name(r.stat);
        row["value"] = r.value;
        arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << "\n";
}

void write_reports(std::ostream& out, const std::vector<VerificationReport>& rows,
                   const ReportOptions& opt) {
    if (opt.format == OutputFormat::Csv) {
        if (!opt.deterministic) out << "# generated " << now_utc() << "\n";
        out << "claim_id,n,p,q,statistic,status,lhs,rhs,witness\n";
        for (const auto& r : rows) {
            out << r.claim_id << ',' << r.n << ',';
            if (r.p != 0) out << r.p;
            out << ',';
            if (r.q != 0) out << r.q;
            out << ',' << r.statistic << ',' << status_name(r.status) << ',';
            if (r.status != VerificationReport::Status::Skipped) out << r.lhs;
            out << ',';
            if (r.status != VerificationReport::Status::Skipped) out << r.rhs;
            out << ',' << r.witness << "\n";
        }
        return;
    }
    json doc;
    doc["format_version"] = 1;
    doc["kind"] = "verify";
    if (!opt.deterministic) doc["generated_at"] = now_utc();
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        row["claim_id"] = r.claim_id;
        row["n"] = r.n;
        if (r.p != 0) row["p"] = r.p; else row["p"] = nullptr;
        if (r.q != 0) row["q"] = r.q; else row["q"] = nullptr;
        row["statistic"] = r.statistic;
        row["status"] = status_name(r.status);
        if (r.status != VerificationReport::Status::Skipped) {
            row["lhs"] = r.lhs;
            row["rhs"] = r.rhs;
        } else {
            row["lhs"] = nullptr;
            row["rhs"] = nullptr;
        }
        row["witness"] = r.witness;
        arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << "\n";
}

} // namespace slk
