#include "greenring/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace greenring {

std::size_t VerificationReport::passed() const {
    return std::size_t(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

void VerificationReport::add(std::string key, std::string expected, std::string actual, bool pass, std::string note) {
    cases.push_back({std::move(key), std::move(expected), std::move(actual), pass, std::move(note)});
}

void VerificationReport::add_check(std::string key, bool pass, std::string note) {
    cases.push_back({std::move(key), "true", pass ? "true" : "false", pass, std::move(note)});
}

void VerificationReport::sort_cases() {
    std::stable_sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.cases) {
        c.key = prefix + c.key;
        cases.push_back(std::move(c));
    }
    seconds += other.seconds;
}

std::string VerificationReport::json(int indent) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["summary"] = {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}};
    j["seconds"] = seconds;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json e;
        e["key"] = c.key;
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        e["pass"] = c.pass;
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    j["cases"] = std::move(arr);
    return j.dump(indent);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seconds = j.value("seconds", 0.0);
    for (const auto& e : j.at("cases")) {
        r.cases.push_back({e.at("key").get<std::string>(), e.at("expected").get<std::string>(),
                           e.at("actual").get<std::string>(), e.at("pass").get<bool>(), e.value("note", std::string())});
    }
    const auto& s = j.at("summary");
    if (s.at("total").get<std::size_t>() != r.cases.size() || s.at("passed").get<std::size_t>() != r.passed())
        throw std::runtime_error("report summary does not match its case list");
    return r;
}

std::string VerificationReport::text(bool failures_only) const {
    std::ostringstream os;
    os << suite << ": " << passed() << "/" << cases.size() << " passed";
    os.precision(3);
    os << " (" << std::fixed << seconds << " s)\n";
    for (const auto& c : cases) {
        if (failures_only && c.pass) continue;
        os << (c.pass ? "  ok   " : "  FAIL ") << c.key;
        if (!c.pass) os << "\n         expected " << c.expected << "\n         actual   " << c.actual;
        if (!c.note.empty()) os << "\n         note: " << c.note;
        os << "\n";
    }
    return os.str();
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.suite == b.suite && a.cases == b.cases;
}

}  // namespace greenring
