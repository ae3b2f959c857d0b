#ifndef PVI_REPORT_HPP
#define PVI_REPORT_HPP

#include <string>
#include <vector>

#include "pvi/complex_utils.hpp"

namespace pvi {

// Machine-readable run report: one JSON document per invocation, complex
// numbers always as {re, im} pairs.
struct RunReport {
    struct Value {
        std::string name;
        double re = 0.0;
        double im = 0.0;
        double err = 0.0;  // error estimate when available
    };
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Value> results;
    std::vector<std::string> flags;  // validity flags
    double elapsed_ms = 0.0;

    void add(const std::string& name, cplx v, double err = 0.0) {
        results.push_back({name, v.real(), v.imag(), err});
    }
    std::string to_json() const;
    std::string to_csv() const;
};

} // namespace pvi

#endif
