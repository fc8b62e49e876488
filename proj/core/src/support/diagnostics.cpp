#include "qirc/support/diagnostics.hpp"

#include <sstream>

#include "qirc/support/format.hpp"

namespace qirc {

std::string Diagnostic::str() const {
    std::ostringstream os;
    if (line > 0) {
        os << line << ":" << column << ": ";
    }
    os << (severity == Severity::Error ? "error" : "warning");
    os << " [" << code << "]: " << message;
    return os.str();
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        if (d.severity == Severity::Error) return true;
    }
    return false;
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags, const std::string& file) {
    std::ostringstream os;
    for (const auto& d : diags) {
        if (!file.empty()) os << file << ":";
        os << d.str() << "\n";
    }
    return os.str();
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace qirc
