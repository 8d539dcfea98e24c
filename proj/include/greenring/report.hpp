#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace greenring {

struct CaseResult {
    std::string key;       // instance parameters
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double seconds = 0;

    std::size_t passed() const;
    std::size_t failed() const { return cases.size() - passed(); }
    bool all() const { return failed() == 0; }
    void add(std::string key, std::string expected, std::string actual, bool pass, std::string note = "");
    void add_check(std::string key, bool pass, std::string note = "");
    // Sorted by key, stable for equal keys.
    void sort_cases();
    void append(const VerificationReport& other, const std::string& prefix = "");

    std::string json(int indent = 2) const;
    static VerificationReport from_json(const std::string& text);
    std::string text(bool failures_only = false) const;

    friend bool operator==(const VerificationReport& a, const VerificationReport& b);
};

inline bool operator==(const CaseResult& a, const CaseResult& b) {
    return a.key == b.key && a.expected == b.expected && a.actual == b.actual && a.pass == b.pass && a.note == b.note;
}

}  // namespace greenring
