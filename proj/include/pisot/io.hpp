#ifndef PISOT_IO_HPP
#define PISOT_IO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pisot/strongcoin.hpp"

// Rationals travel as exact strings such as "-3/4".
namespace nlohmann {
template <>
struct adl_serializer<pisot::Rational> {
    static void to_json(json& j, const pisot::Rational& q) { j = q.str(); }
    static void from_json(const json& j, pisot::Rational& q) { q = pisot::parse_rational(j.get<std::string>()); }
};
}  // namespace nlohmann

namespace pisot {

/// Malformed input; the message names the file and the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Expectations in a corpus file are unusable.
class FixtureError : public Error {
public:
    using Error::Error;
};

struct Expectations {
    std::optional<bool> overlap_coincidence;
    std::optional<bool> msc;
};

struct SubstitutionFile {
    std::string name;
    std::vector<std::string> alphabet;
    Substitution substitution;
    Expectations expected;
};

/// {"alphabet": [...], "rules": {letter: [letters...]}, "name": ...,
///  "expected": {"overlap_coincidence": bool, "msc": bool}}
SubstitutionFile parse_substitution(const nlohmann::json& j, const std::string& source = "<input>");
SubstitutionFile parse_substitution_text(const std::string& text, const std::string& source = "<input>");
SubstitutionFile load_substitution(const std::filesystem::path& path);

/// Exact element of Q(beta) as rational power-basis coordinates.
using Coords = std::vector<Rational>;

Coords coords_of(const AlgebraicReal& x);

struct ClassRow {
    int u = 0;  ///< 1-based colours
    int v = 0;
    Coords shift;
    bool operator==(const ClassRow&) const = default;
};

struct EdgeRow {
    int from = 0;
    int to = 0;
    std::int64_t mult = 0;
    bool operator==(const EdgeRow&) const = default;
};

struct SccRow {
    std::vector<int> members;
    bool reaches_coincidence = false;
    bool perron_is_expansion = false;
    bool operator==(const SccRow&) const = default;
};

struct OverlapSection {
    bool holds = false;
    Coords radius;
    int doublings = 0;
    int level = 1;
    std::vector<ClassRow> vertices;
    std::vector<EdgeRow> edges;
    std::vector<int> distance;
    std::vector<int> stuck;
    std::vector<SccRow> sccs;
    bool operator==(const OverlapSection&) const = default;
};

struct PairRow {
    int i = 0;
    int j = 0;
    std::string status;
    int level = 0;  ///< serialized as "L"
    std::vector<ClassRow> exhausted;
    bool operator==(const PairRow&) const = default;
};

struct MapRow {
    std::vector<int> choice;  ///< 1-based subtile indices
    std::vector<Coords> control_points;
    bool admissible = false;
    bool in_group = false;
    std::vector<PairRow> pairs;
    bool operator==(const MapRow&) const = default;
};

struct MscSection {
    int level = 1;
    bool holds = false;
    std::size_t maps_total = 0;
    std::size_t maps_tested = 0;
    bool vacuous = false;
    std::vector<MapRow> maps;
    bool operator==(const MscSection&) const = default;
};

struct WitnessSection {
    ClassRow overlap;
    MapRow family;
    int failing_i = 0;
    int failing_j = 0;
    bool operator==(const WitnessSection&) const = default;
};

struct Gates {
    bool primitive = false;
    bool pisot = false;
    bool irreducible = false;
    bool operator==(const Gates&) const = default;
};

struct AnalysisReport {
    std::string name;
    std::vector<std::string> alphabet;
    std::map<std::string, std::vector<std::string>> rules;
    Gates gates;
    std::vector<std::string> char_poly;  ///< integer coefficients, constant first
    std::vector<std::string> min_poly;
    std::vector<Rational> beta_interval;
    std::vector<Coords> lengths;
    OverlapSection overlap;
    int level_n = 1;
    MscSection msc;
    std::optional<WitnessSection> witness;
    bool agreement = false;
    std::map<std::string, double> timings_ms;
    std::vector<std::string> notes;
    bool operator==(const AnalysisReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassRow, u, v, shift)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EdgeRow, from, to, mult)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SccRow, members, reaches_coincidence, perron_is_expansion)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OverlapSection, holds, radius, doublings, level, vertices, edges, distance, stuck,
                                   sccs)
inline void to_json(nlohmann::json& j, const PairRow& p) {
    j = {{"i", p.i}, {"j", p.j}, {"status", p.status}, {"L", p.level}, {"exhausted", p.exhausted}};
}
inline void from_json(const nlohmann::json& j, PairRow& p) {
    j.at("i").get_to(p.i);
    j.at("j").get_to(p.j);
    j.at("status").get_to(p.status);
    j.at("L").get_to(p.level);
    j.at("exhausted").get_to(p.exhausted);
}
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MapRow, choice, control_points, admissible, in_group, pairs)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MscSection, level, holds, maps_total, maps_tested, vacuous, maps)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WitnessSection, overlap, family, failing_i, failing_j)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Gates, primitive, pisot, irreducible)

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

struct AnalyzeOptions {
    std::optional<Rational> radius;
    std::size_t cap_classes = kDefaultClassCap;
    std::size_t cap_maps = kDefaultMapCap;
    int k_max = kDefaultKMax;
    std::optional<int> level;
    bool witness = true;
};

/// Gates for a parsed substitution, without building the tiling.
Gates check_gates(const Substitution& s);

/// The whole pipeline: gates, Perron data, overlap graph and verdict, level
/// n, multiple strong coincidence at n, and a witness when coincidence fails.
AnalysisReport analyze(const SubstitutionFile& f, const AnalyzeOptions& opt = {});

OverlapSection overlap_section(const SuspensionTiling& t, const OverlapAnalysis& a);
MapRow map_row(const SuspensionTiling& t, const MapSummary& s);
MapRow map_row(const StrongCoincidenceReport& r, bool admissible);
MscSection msc_section(const SuspensionTiling& t, const MscResult& r);

}  // namespace pisot

#endif
