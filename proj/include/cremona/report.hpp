#pragma once

// Claim registry, verification driver, and the persisted output formats.
// Rationals are always written as "p/q" strings; the only floating-point
// values in any output belong to the power-iteration items and are marked
// "approximate".

#include "cremona/geometry.hpp"
#include "cremona/orbit.hpp"
#include "cremona/spectra.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cremona {

using Json = nlohmann::ordered_json;

struct Claim {
    std::string_view id;
    std::string_view anchor;
    std::string_view summary;
};

/// Every claim the verifier can report on, ordered by id.
std::span<const Claim> claims();
/// Throws std::out_of_range for an unknown id.
const Claim& claim(std::string_view id);

struct ReportItem {
    std::string id;
    std::string anchor;
    bool pass = false;
    Json witness;
    double seconds = 0;
};

struct VerificationReport {
    std::vector<ReportItem> items;
    bool all_pass() const;
};

enum class Fault { none, adjointness };

struct VerifyOptions {
    std::size_t steps = 50;         ///< negativity certificates for n <= steps
    std::size_t track_steps = 4;    ///< geometric realization depth
    std::size_t random_words = 100; ///< adjointness/pairing samples
    std::uint64_t seed = 1;
    std::optional<Configuration> spatial_config;  ///< overrides the seeded one
    Rational refine_width = Rational(Integer(1), Integer("1000000000000"));
    Fault fault = Fault::none;
};

VerificationReport verify_paper(const VerifyOptions& opts);

// -- serialization ----------------------------------------------------------

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);  ///< ascending coefficient strings
Json to_json(const RealAlgebraic& a);
Json to_json(const ProjPoint& p);
Json to_json(const Configuration& c);
Json to_json(std::span<const Rational> raw);
Json to_json(const DegeneracyReport& r);
Json to_json(const TrackReport& r);
Json to_json(const VerificationReport& r, bool timing);

/// List of coordinate arrays (rational strings or integers).
Configuration configuration_from_json(const Json& j);

/// Exact decimal rounding (half away from zero) of q to the given digits.
std::string decimal_string(const Rational& q, unsigned digits);

std::string to_markdown(const VerificationReport& r, bool timing);
std::string to_csv(const VerificationReport& r, bool timing);
/// One line per item: "PASS id  anchor".
std::string summary(const VerificationReport& r);

/// Orbit table rows "n, delta, mu_1..mu_k".
std::string orbit_table_csv(std::span<const OrbitRecord> orbit);
std::string orbit_table_markdown(std::span<const OrbitRecord> orbit);
Json orbit_table_json(std::span<const OrbitRecord> orbit);

/// Matrix as rows of rational strings.
Json to_json(const QMatrix& m);

} // namespace cremona
