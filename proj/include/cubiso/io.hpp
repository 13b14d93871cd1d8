#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubiso/classify.hpp"
#include "cubiso/isolate.hpp"
#include "cubiso/sturm.hpp"
#include "cubiso/sweep.hpp"

namespace cubiso {

struct ParseError : Error {
    using Error::Error;
};

struct CubicInput {
    MonicCubic m;
    std::optional<GeneralCubic> general;
    int line = 0;
};

double parse_number(const std::string& s);
CubicInput parse_coefficients(const std::vector<std::string>& tokens);
std::vector<CubicInput> parse_batch(std::istream& in);
void apply_sweep_setting(SweepConfig& cfg, const std::string& key, const std::string& value);
void parse_sweep_config(std::istream& in, SweepConfig& cfg);

nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const Classification& cls);
nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json document(const Classification& cls, const RootIsolation& ri,
                        const std::optional<VerificationReport>& ver = std::nullopt,
                        const std::optional<GeneralCubic>& general = std::nullopt);
RootIsolation isolation_from_json(const nlohmann::json& doc);
MonicCubic coefficients_from_json(const nlohmann::json& doc);
nlohmann::json sweep_json(const SweepReport& rep);

std::string format_cubic(const MonicCubic& m);
std::string format_interval(const Interval& iv);
std::string render_text(const Classification& cls, const RootIsolation& ri,
                        const std::optional<VerificationReport>& ver = std::nullopt);
std::string render_sweep_text(const SweepReport& rep);
std::string sweep_series(const SweepReport& rep, char delim = ',');

std::string_view physical_name(PhysicalStatus s);

}  // namespace cubiso
