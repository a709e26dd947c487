#include "magiclim/check.hpp"

namespace magiclim {

std::string Witness::str() const {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(indices[i]);
    }
    if (!detail.empty()) {
        if (!s.empty()) s += ": ";
        s += detail;
    }
    return s;
}

void CheckList::extend(const CheckList& other, const std::string& id_prefix) {
    for (const auto& c : other.checks) {
        Check copy = c;
        copy.id = id_prefix + c.id;
        checks.push_back(std::move(copy));
    }
}

std::size_t CheckList::pass_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

std::size_t CheckList::fail_count() const { return checks.size() - pass_count(); }

const Check* CheckList::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

void CheckList::require_all(const std::string& context) const {
    if (const Check* f = first_failure()) {
        throw VerifyError(context + ": check '" + f->id + "' failed (" + f->description + ")",
                          Witness(f->witness));
    }
}

}  // namespace magiclim
