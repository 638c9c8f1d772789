#include "horadam/report.hpp"

#include <sstream>

#include <json.hpp>

namespace horadam {

CaseResult CaseResult::compare(Rational lhs, Rational rhs) {
    CaseResult r;
    r.status = (lhs == rhs) ? Status::holds : Status::fails;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

CaseResult CaseResult::skip(std::string reason) {
    CaseResult r;
    r.status = Status::skipped;
    r.skip_reason = std::move(reason);
    return r;
}

double VerificationReport::skipped_fraction() const {
    return cases_total == 0 ? 0.0 : static_cast<double>(cases_skipped_precondition) / static_cast<double>(cases_total);
}

void VerificationReport::add(const Bindings& bindings, const CaseResult& result, bool record) {
    ++cases_total;
    switch (result.status) {
        case CaseResult::Status::skipped:
            ++cases_skipped_precondition;
            ++skip_reasons[result.skip_reason];
            break;
        case CaseResult::Status::fails:
            ++cases_checked;
            counterexamples.push_back({bindings, result.lhs, result.rhs});
            break;
        case CaseResult::Status::holds:
            ++cases_checked;
            break;
    }
    if (record) cases.push_back({bindings, result});
}

void VerificationReport::merge(const VerificationReport& other) {
    cases_total += other.cases_total;
    cases_checked += other.cases_checked;
    cases_skipped_precondition += other.cases_skipped_precondition;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    for (const auto& [reason, count] : other.skip_reasons) skip_reasons[reason] += count;
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::string to_json(const VerificationReport& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["identity"] = report.identity;
    doc["grid"] = report.grid;
    doc["cases_total"] = report.cases_total;
    doc["cases_checked"] = report.cases_checked;
    doc["cases_skipped_precondition"] = report.cases_skipped_precondition;
    doc["counterexamples"] = ordered_json::array();
    for (const auto& cx : report.counterexamples) {
        ordered_json bindings = ordered_json::object();
        for (const auto& [name, value] : cx.bindings) bindings[name] = value;
        doc["counterexamples"].push_back({{"bindings", bindings}, {"lhs", cx.lhs.to_string()}, {"rhs", cx.rhs.to_string()}});
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "# identity=" << report.identity << "\n";
    os << "# grid=" << report.grid << "\n";
    os << "# cases_total=" << report.cases_total << "\n";
    os << "# cases_checked=" << report.cases_checked << "\n";
    os << "# cases_skipped_precondition=" << report.cases_skipped_precondition << "\n";

    // Header from the first counterexample; all share the grid's variables.
    if (!report.counterexamples.empty()) {
        for (const auto& [name, value] : report.counterexamples.front().bindings) os << csv_field(name) << ",";
    }
    os << "lhs,rhs\n";
    for (const auto& cx : report.counterexamples) {
        for (const auto& [name, value] : cx.bindings) os << value << ",";
        os << cx.lhs << "," << cx.rhs << "\n";
    }
    return os.str();
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "identity: " << report.identity << "\n";
    os << "grid:     " << report.grid << "\n";
    os << "cases:    " << report.cases_total << " total, " << report.cases_checked << " checked, "
       << report.cases_skipped_precondition << " skipped\n";
    for (const auto& [reason, count] : report.skip_reasons) os << "  skipped " << count << ": " << reason << "\n";
    os << "result:   " << (report.holds() ? "holds" : "FAILS") << " (" << report.counterexamples.size()
       << " counterexamples)\n";
    for (const auto& cx : report.counterexamples) {
        os << "  ";
        for (const auto& [name, value] : cx.bindings) os << name << "=" << value << " ";
        os << "lhs=" << cx.lhs << " rhs=" << cx.rhs << "\n";
    }
    return os.str();
}

}  // namespace horadam
