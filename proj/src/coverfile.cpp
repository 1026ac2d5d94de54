#include "trico/coverfile.hpp"

#include "trico/errors.hpp"
#include "trico/f3.hpp"

#include "json.hpp"

#include <sstream>

namespace trico {

namespace {

struct RawEntry {
    std::string value;
    bool quoted = false;
    std::size_t line = 0;    // 1-based
    std::size_t offset = 0;  // byte offset of the line start
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

std::map<std::string, RawEntry> collect_entries(const std::string& text) {
    std::map<std::string, RawEntry> out;
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        std::size_t line_start = pos;
        ++line_no;

        // strip comments, but leave # alone inside a quoted value
        bool in_quote = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_quote = !in_quote;
            else if (line[i] == '#' && !in_quote) { line.erase(i); break; }
        }
        line = trim(line);

        if (!line.empty()) {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'", line_start);
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (!is_identifier(key))
                throw ParseError("line " + std::to_string(line_no) + ": bad key '" + key + "'", line_start);
            RawEntry entry;
            entry.line = line_no;
            entry.offset = line_start;
            if (!value.empty() && value.front() == '"') {
                if (value.size() < 2 || value.back() != '"')
                    throw ParseError("line " + std::to_string(line_no) + ": unterminated quote", line_start);
                entry.value = value.substr(1, value.size() - 2);
                entry.quoted = true;
            } else if (value.empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": missing value for '" + key + "'", line_start);
            } else {
                if (value.find('"') != std::string::npos)
                    throw ParseError("line " + std::to_string(line_no) + ": stray quote in value", line_start);
                entry.value = value;
            }
            if (!out.emplace(key, entry).second)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_start);
        }

        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    return out;
}

[[noreturn]] void bad_value(const std::string& key, const RawEntry& entry) {
    throw ParseError("line " + std::to_string(entry.line) + ": bad value '" + entry.value +
                         "' for '" + key + "'",
                     entry.offset);
}

}  // namespace

CoverFileData parse_cover_file(const std::string& text, std::optional<Chart> chart_override) {
    auto entries = collect_entries(text);
    CoverFileData data;

    auto take = [&](const std::string& key) -> std::optional<RawEntry> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        RawEntry entry = it->second;
        entries.erase(it);
        return entry;
    };

    auto form_entry = take("form");
    if (!form_entry) throw ParseError("missing required key 'form'", 0);
    if (form_entry->value == "general_abcd") data.form = Form::GeneralABCD;
    else if (form_entry->value == "cubic_rs") data.form = Form::CubicRS;
    else if (form_entry->value == "cubic_3dc") data.form = Form::Cubic3DC;
    else bad_value("form", *form_entry);

    auto preset_entry = take("preset");
    if (!preset_entry) throw ParseError("missing required key 'preset'", 0);
    if (preset_entry->value == "Mi") data.preset = Preset::Mi;
    else if (preset_entry->value == "Mii") data.preset = Preset::Mii;
    else if (preset_entry->value == "N") data.preset = Preset::N;
    else bad_value("preset", *preset_entry);

    if (auto entry = take("galois")) {
        if (entry->value == "true") data.galois = true;
        else if (entry->value == "false") data.galois = false;
        else bad_value("galois", *entry);
    }
    if (auto entry = take("chart")) {
        if (entry->value == "V0") data.chart = Chart::V0;
        else if (entry->value == "V1") data.chart = Chart::V1;
        else bad_value("chart", *entry);
    }
    if (auto entry = take("spair_budget")) {
        try {
            std::size_t used = 0;
            data.spair_budget = std::stoull(entry->value, &used);
            if (used != entry->value.size()) bad_value("spair_budget", *entry);
        } catch (const std::logic_error&) {
            bad_value("spair_budget", *entry);
        }
    }

    if (chart_override) data.chart = *chart_override;

    auto weights = section_weights(data.form, data.preset);
    auto vars = chart_vars(data.chart);
    for (const auto& [key, entry] : entries) {
        if (!weights.count(key))
            throw ParseError("line " + std::to_string(entry.line) + ": unknown key '" + key + "'",
                             entry.offset);
        if (!entry.quoted)
            throw ParseError("line " + std::to_string(entry.line) + ": section '" + key +
                                 "' must be a quoted polynomial",
                             entry.offset);
        try {
            data.sections[key] = parse_poly(entry.value, vars);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(entry.line) + ": section '" + key + "': " +
                                 e.what(),
                             entry.offset);
        }
    }
    for (const auto& [name, cls] : weights)
        if (!data.sections.count(name))
            throw ParseError("missing section '" + name + "'", 0);

    return data;
}

CoverSpec normalize_to_v0(const CoverFileData& data) {
    CoverSpec spec;
    spec.form = data.form;
    spec.preset = data.preset;
    spec.galois = data.galois;
    spec.spair_budget = data.spair_budget;
    auto weights = section_weights(data.form, data.preset);
    for (const auto& [name, poly] : data.sections) {
        if (data.chart == Chart::V0) {
            spec.sections[name] = poly;
        } else {
            Section given{weights.at(name), Chart::V1, poly};
            spec.sections[name] = transition(given).poly;
        }
    }
    return spec;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[x & 0xf];
        x >>= 4;
    }
    return out;
}

namespace {

nlohmann::ordered_json point_json(const PlanePoint& pt) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [name, value] : pt) j[name] = to_string(value);
    return j;
}

}  // namespace

std::string report_json(const CoverSpec& spec, const ClassificationReport& rep,
                        const std::string& input_name, std::uint64_t input_hash) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["input"]["name"] = input_name;
    j["input"]["fnv1a64"] = hex16(input_hash);
    j["input"]["form"] = to_string(spec.form);
    j["input"]["preset"] = to_string(spec.preset);
    j["input"]["galois"] = spec.galois;

    auto& r = j["result"];
    r["label"] = to_string(rep.label);
    if (rep.label == CaseLabel::Unclassified) {
        r["K2"] = nullptr;
        r["pg"] = nullptr;
    } else {
        r["K2"] = rep.K2;
        r["pg"] = rep.pg;
    }
    r["smooth_over_sigma_inf"] = rep.smooth_over_sigma_inf;
    r["solutions_complete"] = rep.solutions_complete;
    r["singular_points"] = nlohmann::ordered_json::array();
    for (const auto& pt : rep.singular_points) r["singular_points"].push_back(point_json(pt));
    r["branch_points"] = nlohmann::ordered_json::array();
    for (const auto& bp : rep.branch_points) {
        nlohmann::ordered_json b = point_json(bp.at);
        b["totally_ramified"] = bp.totally_ramified;
        b["type"] = to_string(bp.cls.type);
        b["multiplicity"] = bp.cls.multiplicity;
        r["branch_points"].push_back(b);
    }
    r["pushforward"]["pg"] = rep.pushforward.pg;
    r["pushforward"]["chi"] = rep.pushforward.chi;
    r["fibre_genus"] = rep.fibre_genus;
    r["spairs_used"] = rep.spairs_used;
    r["note"] = rep.note;
    return j.dump(2) + "\n";
}

std::string report_text(const CoverSpec& spec, const ClassificationReport& rep,
                        const std::string& input_name) {
    std::ostringstream out;
    out << "input: " << input_name << "\n";
    out << "form: " << to_string(spec.form) << "  preset: " << to_string(spec.preset)
        << "  galois: " << (spec.galois ? "yes" : "no") << "\n";
    out << "label: " << to_string(rep.label) << "\n";
    if (rep.label != CaseLabel::Unclassified)
        out << "K^2: " << rep.K2 << "  pg: " << rep.pg << "\n";
    out << "smooth over the section at infinity: " << (rep.smooth_over_sigma_inf ? "yes" : "no")
        << "\n";
    out << "singular points on the finite chart:";
    if (rep.singular_points.empty()) {
        out << " none";
        if (!rep.solutions_complete) out << " found (enumeration incomplete)";
        out << "\n";
    } else {
        out << "\n";
        for (const auto& pt : rep.singular_points) {
            out << " ";
            for (const auto& [name, value] : pt) out << " " << name << " = " << to_string(value);
            out << "\n";
        }
    }
    for (const auto& bp : rep.branch_points) {
        out << "branch point";
        for (const auto& [name, value] : bp.at) out << " " << name << " = " << to_string(value);
        out << ": type " << to_string(bp.cls.type) << ", multiplicity " << bp.cls.multiplicity
            << ", totally ramified: " << (bp.totally_ramified ? "yes" : "no") << "\n";
    }
    out << "pushforward: pg " << rep.pushforward.pg << "  chi " << rep.pushforward.chi << "\n";
    out << "fibre genus: " << rep.fibre_genus << "\n";
    out << "s-pairs reduced: " << rep.spairs_used << "\n";
    if (!rep.note.empty()) out << "note: " << rep.note << "\n";
    return out.str();
}

}  // namespace trico
