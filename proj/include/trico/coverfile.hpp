#pragma once

#include "cover.hpp"

#include <cstdint>
#include <optional>

namespace trico {

// A cover description as read from disk: `key = value` lines, blank lines
// and # comments allowed, polynomial values inside double quotes.  Known
// scalar keys: form, preset, galois, chart, spair_budget; every other
// accepted key is a section named by the chosen form.
struct CoverFileData {
    Form form = Form::CubicRS;
    Preset preset = Preset::N;
    bool galois = false;
    Chart chart = Chart::V0;
    unsigned long long spair_budget = 100000;
    std::map<std::string, MultiPoly> sections;  // over the declared chart's coordinates
};

CoverFileData parse_cover_file(const std::string& text,
                               std::optional<Chart> chart_override = {});

// rewrite V1 input onto the V0 chart; the identity for V0 input
CoverSpec normalize_to_v0(const CoverFileData& data);

std::uint64_t fnv1a64(const std::string& data);
std::string hex16(std::uint64_t x);

std::string report_json(const CoverSpec& spec, const ClassificationReport& rep,
                        const std::string& input_name, std::uint64_t input_hash);
std::string report_text(const CoverSpec& spec, const ClassificationReport& rep,
                        const std::string& input_name);

}  // namespace trico
