#include "ag/report.hpp"

namespace ag {

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

bool all_scalars(const Json& arr) {
    for (const auto& v : arr)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render(const std::string& prefix, const Json& v, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items())
            render(prefix.empty() ? key : prefix + "." + key, val, out);
        return;
    }
    if (v.is_array()) {
        if (all_scalars(v)) {
            std::string joined;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) joined += ", ";
                joined += scalar_text(v[i]);
            }
            out += prefix + ": " + joined + "\n";
            return;
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            render(prefix + "[" + std::to_string(i) + "]", v[i], out);
        return;
    }
    out += prefix + ": " + scalar_text(v) + "\n";
}

}  // namespace

std::string render_report_text(const Json& report) {
    std::string out;
    render("", report, out);
    return out;
}

}  // namespace ag
