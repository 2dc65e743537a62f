#include "dgldpc/json_format.hpp"

#include <cmath>
#include <cstdio>

namespace dgldpc {

namespace {

void dump_into(std::string& out, const nlohmann::ordered_json& v, int indent, int depth) {
    const auto newline = [&](int level) {
        if (indent < 0) return;
        out.push_back('\n');
        out.append(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (v.type()) {
        case nlohmann::json::value_t::number_float: {
            const double d = v.get<double>();
            if (std::isfinite(d)) {
                out += format_double(d);
            } else {
                out += nlohmann::ordered_json(format_double(d)).dump();
            }
            return;
        }
        case nlohmann::json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out.push_back('[');
            bool first = true;
            for (const auto& item : v) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                dump_into(out, item, indent, depth + 1);
            }
            newline(depth);
            out.push_back(']');
            return;
        }
        case nlohmann::json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out.push_back('{');
            bool first = true;
            for (const auto& item : v.items()) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                out += nlohmann::ordered_json(item.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(out, item.value(), indent, depth + 1);
            }
            newline(depth);
            out.push_back('}');
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string dump_json(const nlohmann::ordered_json& value, int indent) {
    std::string out;
    dump_into(out, value, indent, 0);
    return out;
}

}  // namespace dgldpc
