#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magiclim {

/// Location data attached to a failed verification: which indices (basis
/// element, tower level, grid position, ...) witnessed the violation.
struct Witness {
    std::vector<std::size_t> indices;
    std::string detail;

    Witness() = default;
    Witness(std::vector<std::size_t> idx, std::string d)
        : indices(std::move(idx)), detail(std::move(d)) {}
    explicit Witness(std::string d) : detail(std::move(d)) {}

    std::string str() const;
};

/// Thrown when a verification precondition or law fails and the operation
/// cannot return a partial result. Carries the witness of the violation.
class VerifyError : public std::runtime_error {
public:
    VerifyError(const std::string& what, Witness w)
        : std::runtime_error(what + (w.str().empty() ? "" : " [" + w.str() + "]")),
          witness_(std::move(w)) {}
    explicit VerifyError(const std::string& what) : std::runtime_error(what) {}

    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

/// One verified statement, suitable for report emission.
struct Check {
    std::string id;           // stable identifier, e.g. "hopf.coassoc"
    std::string description;  // human-readable statement
    std::string anchor;       // the algebraic law being checked
    bool pass = true;
    std::string witness;      // populated when pass == false
};

/// Ordered list of checks. Order of insertion is the report order.
struct CheckList {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }

    void add(const std::string& id, const std::string& description,
             const std::string& anchor, bool pass, const std::string& witness = "") {
        checks.push_back(Check{id, description, anchor, pass, pass ? "" : witness});
    }

    /// Append all checks of another list, optionally prefixing their ids.
    void extend(const CheckList& other, const std::string& id_prefix = "");

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t pass_count() const;
    std::size_t fail_count() const;

    /// First failing check, or nullptr.
    const Check* first_failure() const;

    /// Throws VerifyError if any check failed.
    void require_all(const std::string& context) const;
};

}  // namespace magiclim
