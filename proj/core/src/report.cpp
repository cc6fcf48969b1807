#include "bifrob/report.hpp"

namespace bifrob {

void VerificationReport::add_pass(std::string id, std::string note) {
    entries_.push_back({std::move(id), CheckStatus::Pass, std::nullopt, std::move(note)});
}

void VerificationReport::add_fail(std::string id, CheckWitness witness, std::string note) {
    entries_.push_back({std::move(id), CheckStatus::Fail, std::move(witness), std::move(note)});
}

void VerificationReport::add_skip(std::string id, std::string reason) {
    entries_.push_back({std::move(id), CheckStatus::Skipped, std::nullopt, std::move(reason)});
}

void VerificationReport::append(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerificationReport::all_passed() const {
    for (const auto& e : entries_)
        if (e.status == CheckStatus::Fail) return false;
    return true;
}

const CheckEntry* VerificationReport::find(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

} // namespace bifrob
