// pisotcoin: overlap coincidence and multiple strong coincidence for
// suspension tilings of Pisot substitutions.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pisot/io.hpp"

using namespace pisot;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kGate = 2, kCap = 3 };

struct Flags {
    std::string file;
    std::string radius;
    std::size_t cap_classes = kDefaultClassCap;
    std::size_t cap_maps = kDefaultMapCap;
    int k_max = kDefaultKMax;
    int level = 0;
    bool json = false;
    std::string dot;
    std::string choice;
};

AnalyzeOptions options_of(const Flags& f) {
    AnalyzeOptions o;
    if (!f.radius.empty()) o.radius = parse_rational(f.radius);
    o.cap_classes = f.cap_classes;
    o.cap_maps = f.cap_maps;
    o.k_max = f.k_max;
    if (f.level > 0) o.level = f.level;
    return o;
}

std::optional<AlgebraicReal> radius_of(const SuspensionTiling& t, const Flags& f) {
    if (f.radius.empty()) return std::nullopt;
    return t.rational(parse_rational(f.radius));
}

std::string format_coords(const Coords& c) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational q = c[k];
        const bool neg = q < 0;
        if (neg) q = -q;
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        const std::string power = k == 0 ? "" : k == 1 ? "b" : "b^" + std::to_string(k);
        if (k == 0)
            out += q.str();
        else if (q == 1)
            out += power;
        else
            out += q.str() + "*" + power;
    }
    return out.empty() ? "0" : out;
}

std::string format_class(const ClassRow& c) {
    return "(" + std::to_string(c.u) + "," + std::to_string(c.v) + "," + format_coords(c.shift) + ")";
}

std::string format_choice(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

std::string format_points(const std::vector<Coords>& cs) {
    std::string out = "(";
    for (std::size_t k = 0; k < cs.size(); ++k) out += (k ? ", " : "") + format_coords(cs[k]);
    return out + ")";
}

const char* yes(bool b) { return b ? "true" : "false"; }

void print_map(std::ostream& os, const MapRow& m) {
    os << "  map " << format_choice(m.choice) << "  c = " << format_points(m.control_points)
       << "  admissible=" << yes(m.admissible) << " in_group=" << yes(m.in_group) << "\n";
    for (const auto& p : m.pairs) {
        os << "    pair (" << p.i << "," << p.j << "): " << p.status;
        if (p.status == "coincidence")
            os << " at L=" << p.level;
        else
            os << " over " << p.exhausted.size() << " classes";
        os << "\n";
    }
}

void print_report(std::ostream& os, const AnalysisReport& r) {
    os << "substitution " << r.name << "\n";
    for (const auto& a : r.alphabet) {
        os << "  " << a << " ->";
        for (const auto& x : r.rules.at(a)) os << " " << x;
        os << "\n";
    }
    os << "gates: primitive=" << yes(r.gates.primitive) << " pisot=" << yes(r.gates.pisot)
       << " irreducible=" << yes(r.gates.irreducible) << "\n";
    IntPoly mp;
    {
        std::vector<BigInt> c;
        for (const auto& s : r.min_poly) c.emplace_back(s);
        mp = IntPoly(std::move(c));
    }
    os << "beta: root of " << to_string(mp, "x") << " in (" << r.beta_interval[0] << ", " << r.beta_interval[1]
       << "]\n";
    os << "lengths: " << format_points(r.lengths) << "\n";
    os << "overlap coincidence: " << yes(r.overlap.holds) << " (" << r.overlap.vertices.size() << " classes, "
       << r.overlap.edges.size() << " edges, radius " << format_coords(r.overlap.radius) << ")\n";
    if (!r.overlap.stuck.empty()) {
        os << "  stuck:";
        for (int v : r.overlap.stuck) os << " " << format_class(r.overlap.vertices[static_cast<std::size_t>(v - 1)]);
        os << "\n";
    }
    os << "level n: " << r.level_n << "\n";
    os << "multiple strong coincidence at level " << r.msc.level << ": " << yes(r.msc.holds) << " ("
       << r.msc.maps_tested << " of " << r.msc.maps_total << " tile maps tested)\n";
    for (const auto& m : r.msc.maps) print_map(os, m);
    if (r.witness) {
        os << "witness: overlap " << format_class(r.witness->overlap) << ", failing pair (" << r.witness->failing_i
           << "," << r.witness->failing_j << ")\n";
        print_map(os, r.witness->family);
    }
    os << "agreement: " << yes(r.agreement) << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    os << "time: " << static_cast<long>(r.timings_ms.at("total")) << " ms\n";
}

int cmd_analyze(const Flags& f) {
    const auto file = load_substitution(f.file);
    const auto report = analyze(file, options_of(f));
    if (f.json)
        std::cout << json(report).dump(2) << "\n";
    else
        print_report(std::cout, report);
    return report.agreement ? kOk : kMismatch;
}

int cmd_overlaps(const Flags& f) {
    const auto file = load_substitution(f.file);
    if (!check_gates(file.substitution).primitive) throw GateFailure("primitivity gate failed");
    const SuspensionTiling t(file.substitution);
    const auto a = analyze_overlaps(t, radius_of(t, f), 1, f.cap_classes);
    if (!f.dot.empty()) {
        std::ofstream out(f.dot, std::ios::binary);
        if (!out) throw ParseError(f.dot + ": cannot write");
        write_dot(out, a.graph, a.verdict);
    }
    const auto section = overlap_section(t, a);
    if (f.json) {
        std::cout << json(section).dump(2) << "\n";
        return kOk;
    }
    std::cout << "overlap coincidence: " << yes(section.holds) << "\n";
    std::cout << "radius: " << format_coords(section.radius) << " after " << section.doublings << " doublings\n";
    for (std::size_t k = 0; k < section.vertices.size(); ++k)
        std::cout << "  " << k + 1 << " " << format_class(section.vertices[k]) << "  distance "
                  << section.distance[k] << "\n";
    return kOk;
}

std::vector<int> parse_choice(const std::string& s, int m) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int k = std::stoi(item, &used);
            if (used != item.size() || k < 1) throw std::invalid_argument(item);
            out.push_back(k - 1);
        } catch (const std::exception&) {
            throw PreconditionError("--choice: '" + item + "' is not a positive subtile index");
        }
    }
    if (static_cast<int>(out.size()) != m)
        throw PreconditionError("--choice needs " + std::to_string(m) + " comma-separated indices");
    return out;
}

int cmd_strong(const Flags& f) {
    const auto file = load_substitution(f.file);
    if (!check_gates(file.substitution).primitive) throw GateFailure("primitivity gate failed");
    const SuspensionTiling t(file.substitution);
    const int level = std::max(1, f.level);
    std::vector<int> choice(static_cast<std::size_t>(t.alphabet_size()), 0);
    if (!f.choice.empty()) choice = parse_choice(f.choice, t.alphabet_size());
    const auto cp = solve_control_points(t, make_tile_map(t, level, choice));
    if (!cp.admissible) {
        std::cout << "control points not admissible; strong coincidence is undefined for this family\n";
        return kGate;
    }
    const auto a = analyze_overlaps(t, radius_of(t, f), 1, f.cap_classes);
    const GroupG g(t, a.radius, f.k_max);
    auto rep = strong_coincidence(t, cp, f.cap_classes);
    rep.in_group = in_group(g, cp.c);
    const auto row = map_row(rep, cp.admissible);
    if (f.json)
        std::cout << json(row).dump(2) << "\n";
    else {
        std::cout << "strong coincidence: " << yes(rep.holds()) << "\n";
        print_map(std::cout, row);
    }
    return kOk;
}

int cmd_msc(const Flags& f) {
    const auto file = load_substitution(f.file);
    if (!check_gates(file.substitution).primitive) throw GateFailure("primitivity gate failed");
    const SuspensionTiling t(file.substitution);
    const auto a = analyze_overlaps(t, radius_of(t, f), 1, f.cap_classes);
    const int level = f.level > 0 ? f.level : compute_level_n(a.graph);
    const GroupG g(t, a.radius, f.k_max);
    const auto m = msc_section(t, multiple_strong_coincidence(t, g, level, {f.cap_maps, f.cap_classes}));
    if (f.json) {
        std::cout << json(m).dump(2) << "\n";
        return kOk;
    }
    std::cout << "multiple strong coincidence at level " << m.level << ": " << yes(m.holds) << " (" << m.maps_tested
              << " of " << m.maps_total << " tile maps tested)\n";
    if (m.vacuous) std::cerr << "warning: no tile map passed the filters; the verdict is vacuous\n";
    for (const auto& row : m.maps) print_map(std::cout, row);
    return kOk;
}

int cmd_verify(const Flags& f, const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError(dir + ": not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "warning: no corpus files in " << dir << "\n";
        return kOk;
    }
    int code = kOk;
    std::printf("%-28s %-6s %-6s %-3s %-10s %s\n", "file", "OC", "MSC", "n", "time_ms", "status");
    for (const auto& p : files) {
        const std::string name = p.filename().string();
        try {
            const auto file = load_substitution(p);
            const auto r = analyze(file, options_of(f));
            std::string status = "pass";
            if (!r.agreement) status = "FAIL: OC and MSC disagree";
            if (file.expected.overlap_coincidence && *file.expected.overlap_coincidence != r.overlap.holds)
                status = "FAIL: overlap coincidence differs from expectation";
            if (file.expected.msc && *file.expected.msc != r.msc.holds)
                status = "FAIL: MSC differs from expectation";
            if (status != "pass") code = std::max(code, int(kMismatch));
            std::printf("%-28s %-6s %-6s %-3d %-10ld %s\n", name.c_str(), yes(r.overlap.holds), yes(r.msc.holds),
                        r.msc.level, static_cast<long>(r.timings_ms.at("total")), status.c_str());
        } catch (const FixtureError& e) {
            std::printf("%-28s fixture error: %s\n", name.c_str(), e.what());
            code = std::max(code, int(kGate));
        } catch (const ParseError& e) {
            std::printf("%-28s parse error: %s\n", name.c_str(), e.what());
            code = std::max(code, int(kGate));
        } catch (const GateFailure& e) {
            std::printf("%-28s gate failure: %s\n", name.c_str(), e.what());
            code = std::max(code, int(kGate));
        } catch (const CapExceeded& e) {
            std::printf("%-28s cap exceeded: %s\n", name.c_str(), e.what());
            code = std::max(code, int(kCap));
        }
    }
    return code;
}

int cmd_dekking(const Flags& f) {
    const auto file = load_substitution(f.file);
    const bool holds = dekking_column_check(file.substitution);
    std::cout << "column coincidence: " << yes(holds) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Overlap coincidence and multiple strong coincidence for Pisot substitution tilings"};
    app.require_subcommand(1);
    Flags f;
    std::string corpus;

    auto add_common = [&](CLI::App* sub, bool with_file = true) {
        if (with_file) sub->add_option("file", f.file, "substitution JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--radius", f.radius, "initial seeding radius, a rational such as 12 or 25/2");
        sub->add_option("--cap-classes", f.cap_classes, "maximum number of overlap classes")->capture_default_str();
        sub->add_option("--cap-maps", f.cap_maps, "maximum number of tile maps")->capture_default_str();
        sub->add_option("--kmax", f.k_max, "largest power of beta in group membership")->capture_default_str();
        sub->add_option("--level", f.level, "inflation level n (default: computed)");
        sub->add_flag("--json", f.json, "print JSON instead of text");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline with agreement check");
    add_common(analyze_cmd);
    auto* overlaps_cmd = app.add_subcommand("overlaps", "overlap graph and its coincidence verdict");
    add_common(overlaps_cmd);
    overlaps_cmd->add_option("--dot", f.dot, "write the overlap graph in Graphviz format");
    auto* strong_cmd = app.add_subcommand("strong", "strong coincidence for one tile map");
    add_common(strong_cmd);
    strong_cmd->add_option("--choice", f.choice, "1-based subtile index per colour, comma separated");
    auto* msc_cmd = app.add_subcommand("msc", "multiple strong coincidence over all tile maps");
    add_common(msc_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "run every corpus file and compare with its expectations");
    add_common(verify_cmd, false);
    verify_cmd->add_option("corpus", corpus, "directory of substitution JSON files")->required();
    auto* dekking_cmd = app.add_subcommand("oracle-dekking", "column coincidence for constant-length substitutions");
    dekking_cmd->add_option("file", f.file, "substitution JSON file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kGate;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(f);
        if (*overlaps_cmd) return cmd_overlaps(f);
        if (*strong_cmd) return cmd_strong(f);
        if (*msc_cmd) return cmd_msc(f);
        if (*verify_cmd) return cmd_verify(f, corpus);
        if (*dekking_cmd) return cmd_dekking(f);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded (" << e.cap_name() << " = " << e.cap_value() << "): " << e.what() << "\n";
        return kCap;
    } catch (const GateFailure& e) {
        std::cerr << "gate failure: " << e.what() << "\n";
        return kGate;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kGate;
    } catch (const FixtureError& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kGate;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kGate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kOk;
}
