#include "pvi/report.hpp"

#include <json.hpp>
#include <sstream>

namespace pvi {

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
        j["results"].push_back({{"name", r.name}, {"re", r.re}, {"im", r.im}, {"err", r.err}});
    j["flags"] = flags;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string RunReport::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "name,re,im,err\n";
    for (const auto& r : results)
        os << r.name << "," << r.re << "," << r.im << "," << r.err << "\n";
    return os.str();
}

} // namespace pvi
