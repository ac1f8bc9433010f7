#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "run_config.hpp"

namespace ravel::cli {

enum Exit : int { kOk = 0, kDisagreement = 1, kInputError = 2 };

int cmd_classify(const RunConfig& cfg, const std::string& input, bool refine, std::ostream& out);
int cmd_verify(const RunConfig& cfg, const std::string& input, bool refine, std::ostream& out);
int cmd_render(const RunConfig& cfg, const std::string& input, const std::string& path, bool labels);

struct EnumerateStats {
    std::uint64_t entries = 0;
    std::uint64_t next_cursor = 0;
    std::map<std::string, std::uint64_t> verdicts;
    std::map<std::string, std::uint64_t> agreement;

    std::uint64_t count(const std::string& agreement_kind) const;
    std::string summary() const;
};

// Entries [cursor, cursor + limit) in catalog order, limit 0 meaning all.
// Output is identical for any thread count.
EnumerateStats run_enumeration(const RunConfig& cfg, std::uint64_t cursor, std::uint64_t limit, std::ostream& out);

}  // namespace ravel::cli
