#include "knotvol/report.hpp"

#include <charconv>
#include <sstream>

namespace knotvol {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_complex_array(std::ostringstream& os, const Eigen::VectorXcd& v) {
    os << "[";
    for (int i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << "{\"re\": " << format_double(v[i].real())
           << ", \"im\": " << format_double(v[i].imag()) << "}";
    }
    os << "]";
}

}  // namespace

std::string report_json(const VolumeReport& report, const ReportMeta& meta) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"command\": \"" << json_escape(meta.command) << "\",\n";
    os << "  \"input\": \"" << json_escape(meta.input) << "\",\n";
    os << "  \"solver\": {\"path\": \"" << json_escape(meta.solver_path)
       << "\", \"attempts\": " << meta.config.attempts << ", \"seed\": " << meta.config.seed
       << ", \"tol_essential\": " << format_double(meta.config.tol_essential)
       << ", \"tol_dedup\": " << format_double(meta.config.tol_dedup)
       << ", \"tol_residual\": " << format_double(meta.config.tol_residual)
       << ", \"exhaustive\": " << (report.set.exhaustive ? "true" : "false") << "},\n";
    os << "  \"essential_count\": " << report.essential_count << ",\n";
    os << "  \"degree_lower_bound\": " << report.degree_lower_bound << ",\n";
    if (report.geometric_index >= 0) {
        os << "  \"geometric_index\": " << report.geometric_index << ",\n";
        os << "  \"geometric_vol\": "
           << format_double(
                  report.volumes[static_cast<size_t>(report.geometric_index)]->vol)
           << ",\n";
    } else {
        os << "  \"geometric_index\": null,\n  \"geometric_vol\": null,\n";
    }
    os << "  \"r1\": " << report.r1 << ",\n  \"r2\": " << report.r2 << ",\n";
    os << "  \"borel\": [";
    for (size_t i = 0; i < report.borel.size(); ++i) {
        if (i) os << ", ";
        os << format_double(report.borel[i]);
    }
    os << "],\n";
    if (report.bound_two_bridge) {
        os << "  \"two_bridge_bound\": \"" << report.bound_two_bridge->str() << "\",\n";
    } else {
        os << "  \"two_bridge_bound\": null,\n";
    }
    os << "  \"warnings\": [";
    for (size_t i = 0; i < report.warnings.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << json_escape(report.warnings[i]) << "\"";
    }
    os << "],\n";
    os << "  \"solutions\": [";
    for (size_t i = 0; i < report.set.solutions.size(); ++i) {
        const Solution& s = report.set.solutions[i];
        os << (i ? ",\n    " : "\n    ");
        os << "{\"index\": " << i << ", \"essential\": " << (s.essential ? "true" : "false")
           << ", \"complex\": " << (s.is_complex ? "true" : "false")
           << ", \"residual\": " << format_double(s.residual);
        if (report.volumes[i]) {
            os << ", \"vol\": " << format_double(report.volumes[i]->vol)
               << ", \"cs\": " << format_double(report.volumes[i]->cs);
        } else {
            os << ", \"vol\": null, \"cs\": null";
        }
        os << ", \"z\": ";
        write_complex_array(os, s.z);
        os << ", \"shapes\": ";
        write_complex_array(os, s.shape_values);
        os << "}";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::string report_table(const VolumeReport& report, const ReportMeta& meta) {
    std::ostringstream os;
    os << "command: " << meta.command << " " << meta.input << "\n";
    os << "solver: " << meta.solver_path << " (attempts=" << meta.config.attempts
       << ", seed=" << meta.config.seed
       << ", tol_essential=" << format_double(meta.config.tol_essential)
       << ", tol_dedup=" << format_double(meta.config.tol_dedup)
       << ", exhaustive=" << (report.set.exhaustive ? "yes" : "no") << ")\n";
    os << "solutions: " << report.set.solutions.size() << " (essential "
       << report.essential_count << ")\n";
    os << "idx  ess  cpx  vol                      cs                       residual\n";
    for (size_t i = 0; i < report.set.solutions.size(); ++i) {
        const Solution& s = report.set.solutions[i];
        std::string vol = "-";
        std::string cs = "-";
        if (report.volumes[i]) {
            vol = format_double(report.volumes[i]->vol);
            cs = format_double(report.volumes[i]->cs);
        }
        os << i << (i < 10 ? "    " : "   ") << (s.essential ? "yes  " : "no   ")
           << (s.is_complex ? "yes  " : "no   ");
        os << vol;
        for (size_t pad = vol.size(); pad < 25; ++pad) os << ' ';
        os << cs;
        for (size_t pad = cs.size(); pad < 25; ++pad) os << ' ';
        os << format_double(s.residual) << "\n";
        os << "     z      = [";
        for (int k = 0; k < s.z.size(); ++k) {
            if (k) os << ", ";
            os << format_double(s.z[k].real()) << (s.z[k].imag() < 0 ? " - " : " + ")
               << format_double(std::abs(s.z[k].imag())) << "i";
        }
        os << "]\n";
    }
    if (report.geometric_index >= 0) {
        os << "geometric: index " << report.geometric_index << ", vol = "
           << format_double(
                  report.volumes[static_cast<size_t>(report.geometric_index)]->vol)
           << ", cs = "
           << format_double(report.volumes[static_cast<size_t>(report.geometric_index)]->cs)
           << "\n";
    } else {
        os << "geometric: none\n";
    }
    os << "borel: [";
    for (size_t i = 0; i < report.borel.size(); ++i) {
        if (i) os << ", ";
        os << format_double(report.borel[i]);
    }
    os << "]  (sign convention: each entry is +|Im V0| of one conjugate pair)\n";
    os << "r1=" << report.r1 << " r2=" << report.r2 << "\n";
    os << "degree lower bound: " << report.degree_lower_bound << "\n";
    if (report.bound_two_bridge) {
        os << "two-bridge bound: " << report.bound_two_bridge->str() << "\n";
    }
    for (const std::string& w : report.warnings) os << "warning: " << w << "\n";
    return os.str();
}

}  // namespace knotvol
