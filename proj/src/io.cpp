#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <simperm/io.hpp>

namespace simperm {

using nlohmann::json;

namespace {

BigInt decimal_field(const json& j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("expected a decimal string, got " + j.dump());
    }
    return parse_decimal(j.get<std::string>());
}

void require_keys(const json& j, std::initializer_list<const char*> keys)
{
    if (!j.is_object()) {
        throw std::invalid_argument("expected a JSON object");
    }
    for (const auto* k : keys) {
        if (!j.contains(k)) {
            throw std::invalid_argument(std::string("missing field '") + k + "'");
        }
    }
}

json hp_json(const HighPrecision& h)
{
    return {{"value", h.to_string(12)}, {"error_bound", h.error_bound() == 0 ? std::string("0") : HighPrecision(h.error_bound(), 0).to_string(3)}};
}

} // namespace

json series_to_json(const std::string& name, const TruncSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(to_decimal(c));
    }
    return {{"name", name}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

std::pair<std::string, TruncSeries> series_from_json(const json& j)
{
    require_keys(j, {"name", "order", "coeffs"});
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("coeffs must list order + 1 coefficients");
    }
    std::vector<BigInt> values;
    for (const auto& c : coeffs) {
        values.push_back(decimal_field(c));
    }
    return {j.at("name").get<std::string>(), TruncSeries(std::move(values), order)};
}

json sequence_to_json(const SequenceTable& t)
{
    json values = json::array();
    for (int n = 1; n <= t.max_index(); ++n) {
        values.push_back(json::array({n, to_decimal(t.at(n))}));
    }
    return {{"name", t.name()}, {"provenance", to_string(t.provenance())}, {"values", std::move(values)}};
}

SequenceTable sequence_from_json(const json& j)
{
    require_keys(j, {"name", "provenance", "values"});
    SequenceTable t(j.at("name").get<std::string>(), provenance_from_string(j.at("provenance").get<std::string>()));
    int expected = 1;
    for (const auto& entry : j.at("values")) {
        if (!entry.is_array() || entry.size() != 2 || entry[0].get<int>() != expected) {
            throw std::invalid_argument("values must be [n, \"value\"] pairs with n = 1, 2, ... in order");
        }
        t.push_back(decimal_field(entry[1]));
        ++expected;
    }
    return t;
}

json to_json(const ValuationReport& r)
{
    return {{"n", r.n},
            {"valuation", r.valuation ? json(*r.valuation) : json(nullptr)},
            {"lower_bound", r.lower_bound},
            {"equality_predicted", r.equality_predicted},
            {"equality_observed", r.equality_observed}};
}

json to_json(const ErrorRow& row)
{
    return {{"n", row.n},
            {"exact", to_decimal(row.exact)},
            {"approx", hp_json(row.approx)},
            {"relative_error", row.relative_error ? hp_json(*row.relative_error) : json(nullptr)},
            {"scaled_residual", hp_json(row.scaled_residual)}};
}

std::string error_row_tsv(const ErrorRow& row)
{
    return std::to_string(row.n) + "\t" + to_decimal(row.exact) + "\t" + row.approx.to_string(12) + "\t"
           + (row.relative_error ? row.relative_error->to_string(6) : std::string("exact-zero")) + "\t"
           + row.scaled_residual.to_string(6);
}

std::filesystem::path default_cache_dir()
{
    if (const char* dir = std::getenv("SIMPERM_CACHE_DIR"); dir && *dir) {
        return dir;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "simperm";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "simperm";
    }
    return ".simperm-cache";
}

SequenceCache::SequenceCache(std::filesystem::path dir) : m_dir(std::move(dir)) {}

std::filesystem::path SequenceCache::file_for(const std::string& key) const
{
    for (const char c : key) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            throw std::invalid_argument("cache key '" + key + "' must be alphanumeric");
        }
    }
    return m_dir / (key + ".json");
}

void SequenceCache::store(const std::string& key, const SequenceTable& t) const
{
    std::filesystem::create_directories(m_dir);
    const auto path = file_for(key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << sequence_to_json(t).dump(1) << '\n';
        if (!out) {
            throw std::runtime_error("cannot write " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

std::optional<SequenceTable> SequenceCache::load(const std::string& key) const
{
    const auto path = file_for(key);
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    try {
        return sequence_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed cache file " + path.string() + ": " + e.what());
    }
}

} // namespace simperm
