#pragma once

// Regeneration of the stored result tables and comparison with the golden
// files under tables/.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "knf/serialize.hpp"

namespace knf {

struct ReproduceResult {
    std::string table;
    bool match = false;
    /// One line per disagreement with the golden file.
    std::vector<std::string> mismatches;
    /// Known discrepancies recorded in the golden file; reported, never failed.
    std::vector<std::string> flags;
    Json computed;

    [[nodiscard]] Json payload() const;
};

/// intro, thm1, thm2, thm3, eq22, cy-twists, wedge-d4, spin-tensor.
const std::vector<std::string>& table_ids();

/// KNF_TABLES_DIR from the environment, else the configured source tables/.
std::filesystem::path default_tables_dir();

Json load_golden(const std::filesystem::path& dir, std::string_view id);

/// Computes the table and compares it with the golden file. Throws
/// std::invalid_argument for an unknown id and Error if the golden file is
/// missing or malformed.
ReproduceResult reproduce_table(std::string_view id, const std::filesystem::path& tables_dir);

}  // namespace knf
