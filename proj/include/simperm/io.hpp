#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include <simperm/asymptotics.hpp>
#include <simperm/congruence.hpp>
#include <simperm/sequences.hpp>
#include <simperm/series.hpp>

namespace simperm {

// Integers are written as decimal strings throughout; they outgrow 64 bits
// almost immediately (21! already does).

// {"name": ..., "order": N, "coeffs": ["0", "1", ...]}
nlohmann::json series_to_json(const std::string& name, const TruncSeries& s);
// Returns the name alongside the series. Throws std::invalid_argument on schema errors.
std::pair<std::string, TruncSeries> series_from_json(const nlohmann::json& j);

// {"name": ..., "provenance": ..., "values": [[1, "1"], [2, "2"], ...]}
nlohmann::json sequence_to_json(const SequenceTable& t);
SequenceTable sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValuationReport& r);
nlohmann::json to_json(const ErrorRow& row);

// One line: n, exact, approx, relative_error, scaled_residual.
std::string error_row_tsv(const ErrorRow& row);
inline constexpr const char* error_row_tsv_header = "n\texact\tapprox\trelative_error\tscaled_residual";

// Directory for cached sequence tables: $SIMPERM_CACHE_DIR, else
// $XDG_CACHE_HOME/simperm, else $HOME/.cache/simperm, else ./.simperm-cache.
std::filesystem::path default_cache_dir();

class SequenceCache {
public:
    explicit SequenceCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return m_dir; }

    // `key` names the file (e.g. "s", "f4"); the table's own name is stored inside.
    void store(const std::string& key, const SequenceTable& t) const;
    // Empty when absent. Throws std::invalid_argument for a malformed file.
    std::optional<SequenceTable> load(const std::string& key) const;

private:
    std::filesystem::path file_for(const std::string& key) const;

    std::filesystem::path m_dir;
};

} // namespace simperm
