#include "pisot/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace pisot {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& source, const std::string& field, const std::string& msg) {
    throw ParseError(source + ": " + field + ": " + msg);
}

std::string type_name(const json& j) { return j.type_name(); }

std::optional<bool> read_expectation(const json& e, const char* key, const std::string& source) {
    if (!e.contains(key)) return std::nullopt;
    const json& v = e.at(key);
    if (!v.is_boolean())
        throw FixtureError(source + ": expected." + key + ": must be a boolean, got " + type_name(v));
    return v.get<bool>();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

ClassRow class_row(const OverlapClass& c) { return {c.u + 1, c.v + 1, coords_of(c.shift)}; }

PairRow pair_row(const PairReport& p) {
    PairRow r;
    r.i = p.i + 1;
    r.j = p.j + 1;
    r.status = to_string(p.status);
    r.level = p.level;
    for (const auto& c : p.exhausted) r.exhausted.push_back(class_row(c));
    return r;
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out(v);
    for (auto& x : out) ++x;
    return out;
}

}  // namespace

SubstitutionFile parse_substitution(const json& j, const std::string& source) {
    if (!j.is_object()) parse_fail(source, "top level", "must be an object, got " + type_name(j));
    for (const auto& [key, _] : j.items())
        if (key != "alphabet" && key != "rules" && key != "name" && key != "expected")
            parse_fail(source, key, "unknown field");

    std::string name_field;
    std::vector<std::string> alphabet;
    Expectations expected;
    if (j.contains("name")) {
        if (!j["name"].is_string()) parse_fail(source, "name", "must be a string");
        name_field = j["name"].get<std::string>();
    }

    if (!j.contains("alphabet")) parse_fail(source, "alphabet", "missing");
    const json& alpha = j["alphabet"];
    if (!alpha.is_array() || alpha.empty()) parse_fail(source, "alphabet", "must be a nonempty array of letter names");
    std::map<std::string, Letter> index;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const std::string field = "alphabet[" + std::to_string(k) + "]";
        if (!alpha[k].is_string()) parse_fail(source, field, "must be a string, got " + type_name(alpha[k]));
        std::string name = alpha[k].get<std::string>();
        if (name.empty()) parse_fail(source, field, "empty letter name");
        if (!index.emplace(name, static_cast<Letter>(k)).second)
            parse_fail(source, field, "duplicate letter '" + name + "'");
        alphabet.push_back(std::move(name));
    }

    if (!j.contains("rules")) parse_fail(source, "rules", "missing");
    const json& rules = j["rules"];
    if (!rules.is_object()) parse_fail(source, "rules", "must be an object mapping letters to words");
    for (const auto& [key, _] : rules.items())
        if (!index.count(key)) parse_fail(source, "rules." + key, "rule for undeclared letter '" + key + "'");

    std::vector<Word> words;
    for (const auto& name : alphabet) {
        const std::string field = "rules." + name;
        if (!rules.contains(name)) parse_fail(source, field, "missing rule for letter '" + name + "'");
        const json& w = rules[name];
        if (!w.is_array()) parse_fail(source, field, "must be an array of letter names");
        if (w.empty()) parse_fail(source, field, "empty rule for letter '" + name + "'");
        Word word;
        for (std::size_t k = 0; k < w.size(); ++k) {
            const std::string at = field + "[" + std::to_string(k) + "]";
            if (!w[k].is_string()) parse_fail(source, at, "must be a string, got " + type_name(w[k]));
            const auto letter = w[k].get<std::string>();
            auto it = index.find(letter);
            if (it == index.end()) parse_fail(source, at, "undeclared letter '" + letter + "'");
            word.push_back(it->second);
        }
        words.push_back(std::move(word));
    }

    if (j.contains("expected")) {
        const json& e = j["expected"];
        if (!e.is_object()) throw FixtureError(source + ": expected: must be an object");
        for (const auto& [key, _] : e.items())
            if (key != "overlap_coincidence" && key != "msc")
                throw FixtureError(source + ": expected." + key + ": unknown expectation");
        expected.overlap_coincidence = read_expectation(e, "overlap_coincidence", source);
        expected.msc = read_expectation(e, "msc", source);
    }
    if (name_field.empty()) name_field = source;
    return {std::move(name_field), std::move(alphabet), Substitution(std::move(words)), expected};
}

SubstitutionFile parse_substitution_text(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
    return parse_substitution(j, source);
}

SubstitutionFile load_substitution(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto f = parse_substitution_text(buf.str(), path.string());
    if (f.name == path.string()) f.name = path.stem().string();
    return f;
}

Coords coords_of(const AlgebraicReal& x) {
    const auto& v = x.coords();
    return Coords(v.data(), v.data() + v.size());
}

void to_json(json& j, const AnalysisReport& r) {
    j = json{{"name", r.name},
             {"alphabet", r.alphabet},
             {"rules", r.rules},
             {"gates", r.gates},
             {"char_poly", r.char_poly},
             {"min_poly", r.min_poly},
             {"beta_interval", r.beta_interval},
             {"lengths", r.lengths},
             {"overlap", r.overlap},
             {"level_n", r.level_n},
             {"msc", r.msc},
             {"witness", r.witness ? json(*r.witness) : json(nullptr)},
             {"agreement", r.agreement},
             {"timings_ms", r.timings_ms},
             {"notes", r.notes}};
}

void from_json(const json& j, AnalysisReport& r) {
    j.at("name").get_to(r.name);
    j.at("alphabet").get_to(r.alphabet);
    j.at("rules").get_to(r.rules);
    j.at("gates").get_to(r.gates);
    j.at("char_poly").get_to(r.char_poly);
    j.at("min_poly").get_to(r.min_poly);
    j.at("beta_interval").get_to(r.beta_interval);
    j.at("lengths").get_to(r.lengths);
    j.at("overlap").get_to(r.overlap);
    j.at("level_n").get_to(r.level_n);
    j.at("msc").get_to(r.msc);
    if (j.at("witness").is_null())
        r.witness.reset();
    else
        r.witness = j.at("witness").get<WitnessSection>();
    j.at("agreement").get_to(r.agreement);
    j.at("timings_ms").get_to(r.timings_ms);
    j.at("notes").get_to(r.notes);
}

Gates check_gates(const Substitution& s) {
    Gates g;
    g.primitive = is_primitive(substitution_matrix(s));
    g.irreducible = is_irreducible(s);
    if (g.primitive) g.pisot = perron_data(s).pisot;
    return g;
}

OverlapSection overlap_section(const SuspensionTiling& t, const OverlapAnalysis& a) {
    OverlapSection s;
    s.holds = a.verdict.holds;
    s.radius = coords_of(a.radius);
    s.doublings = a.doublings;
    s.level = a.graph.level;
    for (const auto& c : a.graph.vertices) s.vertices.push_back(class_row(c));
    for (const auto& e : a.graph.graph.edges()) s.edges.push_back({e.from + 1, e.to + 1, e.mult});
    s.distance = a.verdict.distance;
    s.stuck = one_based(a.verdict.stuck);
    for (const auto& r : expansive_sccs(t, a.graph))
        s.sccs.push_back({one_based(r.members), r.reaches_coincidence, r.perron_is_expansion});
    return s;
}

MapRow map_row(const SuspensionTiling&, const MapSummary& m) {
    MapRow r;
    r.choice = one_based(m.choice);
    for (const auto& x : m.c) r.control_points.push_back(coords_of(x));
    r.admissible = m.admissible;
    r.in_group = m.in_group;
    if (m.report)
        for (const auto& p : m.report->pairs) r.pairs.push_back(pair_row(p));
    return r;
}

MapRow map_row(const StrongCoincidenceReport& rep, bool admissible) {
    MapRow r;
    r.choice = one_based(rep.control_points.tile_map.choice);
    for (const auto& x : rep.control_points.c) r.control_points.push_back(coords_of(x));
    r.admissible = admissible;
    r.in_group = rep.in_group;
    for (const auto& p : rep.pairs) r.pairs.push_back(pair_row(p));
    return r;
}

MscSection msc_section(const SuspensionTiling& t, const MscResult& m) {
    MscSection s;
    s.level = m.level;
    s.holds = m.holds;
    s.maps_total = m.maps_total;
    s.maps_tested = m.maps_tested;
    s.vacuous = m.vacuous;
    for (const auto& x : m.maps) s.maps.push_back(map_row(t, x));
    return s;
}

AnalysisReport analyze(const SubstitutionFile& f, const AnalyzeOptions& opt) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    AnalysisReport r;
    r.name = f.name;
    r.alphabet = f.alphabet;
    for (std::size_t a = 0; a < f.alphabet.size(); ++a) {
        auto& word = r.rules[f.alphabet[a]];
        for (Letter x : f.substitution.rule(static_cast<Letter>(a))) word.push_back(f.alphabet[static_cast<std::size_t>(x)]);
    }

    auto t0 = clock::now();
    r.gates = check_gates(f.substitution);
    if (!r.gates.primitive) throw GateFailure("primitivity gate failed: no power of the substitution matrix is positive");
    const SuspensionTiling t(f.substitution);
    r.timings_ms["perron"] = ms_since(t0);
    r.char_poly = coeff_strings(t.perron().char_poly);
    r.min_poly = coeff_strings(t.field()->min_poly());
    r.beta_interval = {t.field()->lower(), t.field()->upper()};
    for (int a = 0; a < t.alphabet_size(); ++a) r.lengths.push_back(coords_of(t.length(a)));

    t0 = clock::now();
    std::optional<AlgebraicReal> radius;
    if (opt.radius) radius = t.rational(*opt.radius);
    const OverlapAnalysis oa = analyze_overlaps(t, radius, 1, opt.cap_classes);
    r.overlap = overlap_section(t, oa);
    r.timings_ms["overlap"] = ms_since(t0);

    r.level_n = compute_level_n(oa.graph);
    const int level = opt.level.value_or(r.level_n);

    t0 = clock::now();
    const GroupG group(t, oa.radius, opt.k_max);
    const MscResult msc = multiple_strong_coincidence(t, group, level, {opt.cap_maps, opt.cap_classes});
    r.msc = msc_section(t, msc);
    r.timings_ms["msc"] = ms_since(t0);
    r.agreement = r.overlap.holds == r.msc.holds;

    r.notes.push_back("families are quantified over tile maps of the level-" + std::to_string(level) +
                      " inflation only");
    if (msc.vacuous) r.notes.push_back("warning: no tile map passed the admissibility and group filters");
    if (!r.agreement) r.notes.push_back("overlap coincidence and multiple strong coincidence disagree");

    if (!oa.verdict.holds && opt.witness) {
        t0 = clock::now();
        for (const auto& comp : stuck_components(oa.graph)) {
            try {
                const Witness w = extract_witness(t, oa.graph, comp, r.level_n, group, opt.cap_classes);
                WitnessSection ws;
                ws.overlap = class_row(w.overlap);
                ws.family.choice = one_based(w.control_points.tile_map.choice);
                for (const auto& x : w.control_points.c) ws.family.control_points.push_back(coords_of(x));
                ws.family.admissible = w.control_points.admissible;
                ws.family.in_group = w.in_group;
                ws.family.pairs.push_back(pair_row(w.failing_pair));
                ws.failing_i = w.failing_i + 1;
                ws.failing_j = w.failing_j + 1;
                r.witness = std::move(ws);
                break;
            } catch (const StructuralError& e) {
                r.notes.push_back(std::string("witness extraction skipped a component: ") + e.what());
            }
        }
        r.timings_ms["witness"] = ms_since(t0);
    }
    r.timings_ms["total"] = ms_since(start);
    return r;
}

}  // namespace pisot
