#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bifrob {

enum class CheckStatus { Pass, Fail, Skipped };

/// Concrete evidence for a failed check: the basis indices it was evaluated
/// at and both sides of the identity, rendered in canonical scalar strings.
struct CheckWitness {
    std::vector<std::size_t> indices;
    std::string lhs;
    std::string rhs;
};

struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::optional<CheckWitness> witness;
    std::string note; // skip reason or informational value
};

/// Ordered pass/fail ledger. Every failed entry carries a witness.
class VerificationReport {
public:
    void add_pass(std::string id, std::string note = {});
    void add_fail(std::string id, CheckWitness witness, std::string note = {});
    void add_skip(std::string id, std::string reason);
    void append(const VerificationReport& other);

    bool all_passed() const; // skipped entries do not count as failures
    const std::vector<CheckEntry>& entries() const { return entries_; }
    const CheckEntry* find(const std::string& id) const;

private:
    std::vector<CheckEntry> entries_;
};

} // namespace bifrob
