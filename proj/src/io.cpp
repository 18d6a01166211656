#include "slopekit/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
    throw Error("cli", "parse", "line " + std::to_string(line) + ": " + message);
}

std::string upper(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s.front())))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;)
        out.push_back(tok);
    return out;
}

class PresentationBuilder {
public:
    void set_generators(const std::vector<std::string>& names, std::size_t line) {
        if (have_generators_)
            parse_error(line, "duplicate generators declaration");
        have_generators_ = true;
        for (const std::string& n : names) {
            if (!valid_name(n))
                parse_error(line, "generator name '" + n + "' must be a lower-case identifier");
            const int index = static_cast<int>(names_.size()) + 1;
            if (!letters_.emplace(n, index).second)
                parse_error(line, "duplicate generator '" + n + "'");
            letters_.emplace(upper(n), -index);
            names_.push_back(n);
        }
    }

    void add_relator(const std::vector<std::string>& tokens, std::size_t line) {
        if (!have_generators_)
            parse_error(line, "relator before generators declaration");
        Word w;
        for (const std::string& tok : tokens) {
            auto it = letters_.find(tok);
            if (it == letters_.end())
                parse_error(line, "unknown letter '" + tok + "'");
            w.letters.push_back(it->second);
        }
        w = free_reduce(w, static_cast<int>(names_.size()));
        if (w.empty())
            parse_error(line, "relator is empty after free reduction");
        relators_.push_back(std::move(w));
    }

    GroupPresentation build(std::size_t line) {
        if (!have_generators_)
            parse_error(line, "missing generators declaration");
        const int count = static_cast<int>(names_.size());
        return GroupPresentation(count, std::move(relators_), std::move(names_));
    }

private:
    bool have_generators_ = false;
    std::vector<std::string> names_;
    std::map<std::string, int> letters_;
    std::vector<Word> relators_;
};

GroupPresentation parse_text(const std::string& source) {
    PresentationBuilder builder;
    std::istringstream is(source);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(is, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const auto tokens = split_ws(raw);
        if (tokens.empty())
            continue;
        const auto colon = raw.find(':');
        if (colon == std::string::npos)
            parse_error(line, "expected 'generators:' or 'relator:'");
        const auto key = split_ws(raw.substr(0, colon));
        const auto rest = split_ws(raw.substr(colon + 1));
        if (key.size() != 1)
            parse_error(line, "malformed key");
        if (key[0] == "generators")
            builder.set_generators(rest, line);
        else if (key[0] == "relator")
            builder.add_relator(rest, line);
        else
            parse_error(line, "unknown key '" + key[0] + "'");
    }
    return builder.build(line == 0 ? 1 : line);
}

GroupPresentation parse_json(const std::string& source) {
    Json j;
    try {
        j = Json::parse(source);
    } catch (const nlohmann::json::exception& e) {
        throw Error("cli", "parse", std::string("invalid JSON presentation: ") + e.what());
    }
    PresentationBuilder builder;
    if (!j.contains("generators") || !j["generators"].is_array())
        parse_error(1, "missing generators array");
    builder.set_generators(j["generators"].get<std::vector<std::string>>(), 1);
    if (j.contains("relators")) {
        std::size_t index = 0;
        for (const auto& r : j["relators"]) {
            ++index;
            std::vector<std::string> tokens = r.is_string() ? split_ws(r.get<std::string>())
                                                            : r.get<std::vector<std::string>>();
            try {
                builder.add_relator(tokens, index);
            } catch (const Error& e) {
                throw Error("cli", "parse", std::string("relator ") + std::to_string(index) + ": " + e.what());
            }
        }
    }
    return builder.build(1);
}

} // namespace

GroupPresentation parse_presentation(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{')
        return parse_json(source);
    return parse_text(source);
}

std::string format_presentation(const GroupPresentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (const auto& n : p.generator_names())
        os << ' ' << n;
    os << '\n';
    for (const Word& r : p.relators())
        os << "relator: " << p.format_word(r) << '\n';
    return os.str();
}

Json presentation_to_json(const GroupPresentation& p) {
    Json relators = Json::array();
    for (const Word& r : p.relators()) {
        Json tokens = Json::array();
        for (const auto& t : split_ws(p.format_word(r)))
            tokens.push_back(t);
        relators.push_back(tokens);
    }
    return Json{{"generators", p.generator_names()}, {"relators", relators}};
}

Json report_to_json(const JumpingLocusReport& report) {
    Json entries = Json::array();
    for (const LocusEntry& e : report.entries)
        entries.push_back(Json{{"modulus", e.character.modulus()},
                               {"exponents", e.character.exponents()},
                               {"depth", e.depth}});
    return Json{{"scan_bound", report.scan_bound},
                {"b1", report.b1},
                {"entries", entries},
                {"exponent", report.exponent}};
}

JumpingLocusReport report_from_json(const Json& j) {
    try {
        std::vector<LocusEntry> entries;
        for (const auto& e : j.at("entries"))
            entries.push_back({TorsionCharacter(e.at("modulus").get<long>(), e.at("exponents").get<std::vector<long>>()),
                               e.at("depth").get<int>()});
        JumpingLocusReport report =
            JumpingLocusReport::from_entries(j.at("scan_bound").get<long>(), j.at("b1").get<int>(), std::move(entries));
        if (j.contains("exponent") && j["exponent"].get<long>() != report.exponent)
            throw Error("jumping_loci", "malformed-report",
                        "stated exponent " + j["exponent"].dump() + " differs from lcm of entry orders " +
                            std::to_string(report.exponent));
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error("jumping_loci", "malformed-report", std::string("invalid report JSON: ") + e.what());
    }
}

Json epimorphism_to_json(const AbelianEpimorphism& alpha) {
    return Json{{"factors", alpha.factors()}, {"matrix", alpha.matrix()}};
}

AbelianEpimorphism epimorphism_from_json(const Json& j) {
    try {
        auto factors = j.at("factors").get<std::vector<long>>();
        auto matrix = j.at("matrix").get<std::vector<std::vector<long>>>();
        int rank = 0;
        if (j.contains("source_rank"))
            rank = j["source_rank"].get<int>();
        else if (!matrix.empty())
            rank = static_cast<int>(matrix.front().size());
        return AbelianEpimorphism(rank, std::move(factors), std::move(matrix));
    } catch (const nlohmann::json::exception& e) {
        throw Error("covers", "malformed-epimorphism", std::string("invalid epimorphism JSON: ") + e.what());
    }
}

Json invariants_to_json(const SurfaceInvariants& x) {
    return Json{{"K2", x.K2()}, {"chi", x.chi()}, {"q", x.q()}, {"pg", x.pg()}};
}

SurfaceInvariants invariants_from_json(const Json& j) {
    try {
        return SurfaceInvariants::create(j.at("K2").get<std::int64_t>(), j.at("chi").get<std::int64_t>(),
                                         j.at("q").get<std::int64_t>(), j.at("pg").get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        throw Error("surface_invariants", "malformed-invariants", std::string("invalid invariants JSON: ") + e.what());
    }
}

Json certificate_to_json(const DensityCertificate& cert) {
    Json entries = Json::array();
    for (const auto& e : cert.entries)
        entries.push_back(Json{{"p", e.target.p()},
                               {"q", e.target.q()},
                               {"target", e.target.value().get_str()},
                               {"n", e.n},
                               {"d", e.params.d},
                               {"k", e.params.k},
                               {"slope", e.achieved.get_str()},
                               {"gap", e.gap.get_str()}});
    return Json{{"epsilon", cert.epsilon.get_str()},
                {"exponent", cert.exponent},
                {"fiber_genus", cert.fiber_genus},
                {"max_denominator", cert.max_denominator},
                {"coverage_radius", coverage_radius(cert).get_str()},
                {"entries", entries}};
}

} // namespace slopekit
