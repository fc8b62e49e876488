#include "qirc/ir/module.hpp"

#include <sstream>

#include "qirc/support/format.hpp"

namespace qirc::ir {

const Function* Module::find_function(const std::string& name) const {
    for (const auto& f : functions) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

const ExternalDecl* Module::find_external(const std::string& name) const {
    for (const auto& e : externals) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

bool Module::has_dialect(const std::string& dialect) const {
    for (const auto& f : functions) {
        for (const auto& op : f.body) {
            if (op.dialect == dialect) return true;
        }
    }
    return false;
}

std::string attr_to_string(const Attr& a) {
    std::ostringstream os;
    if (const auto* i = std::get_if<std::int64_t>(&a)) {
        os << *i;
    } else if (const auto* d = std::get_if<double>(&a)) {
        os << qirc::format_double(*d);
    } else if (const auto* s = std::get_if<std::string>(&a)) {
        os << '"' << *s << '"';
    } else {
        const auto& list = std::get<std::vector<double>>(a);
        os << "[";
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) os << ", ";
            os << qirc::format_double(list[i]);
        }
        os << "]";
    }
    return os.str();
}

}  // namespace qirc::ir
