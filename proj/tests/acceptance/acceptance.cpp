// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "oracles.hpp"
#include "test_data.hpp"

#include "tableau_orbits/enumerate.hpp"
#include "tableau_orbits/mdiagram.hpp"
#include "tableau_orbits/orbit.hpp"
#include "tableau_orbits/ssyt.hpp"
#include "tableau_orbits/text_io.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>
#include <string>

using namespace tableau_orbits;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first failure; later checks are still counted.
class Checker {
public:
    void expect(bool cond, const std::string& what) {
        ++checks_;
        if (!cond && first_failure_.empty())
            first_failure_ = what;
    }
    bool ok() const { return first_failure_.empty(); }
    std::uint64_t checks() const { return checks_; }
    Outcome outcome(const std::string& summary) const {
        if (ok())
            return {true, summary};
        return {false, summary + "; first failure: " + first_failure_};
    }

private:
    std::uint64_t checks_ = 0;
    std::string first_failure_;
};

std::string oneline(const Tableau& t) {
    auto s = format_tableau(t);
    s.pop_back();
    std::replace(s.begin(), s.end(), '\n', '/');
    return s;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

int run_criterion(int id, const std::string& name, double budget_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && seconds > budget_seconds) {
        result.ok = false;
        result.detail += "; exceeded time budget";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", seconds, budget_seconds);
    std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << id << " [" << name << "] (" << timing
              << "): " << result.detail << std::endl;
    return result.ok ? 0 : 1;
}

// --- criterion 1 ----------------------------------------------------------

Outcome golden_running_example() {
    Checker c;
    const auto t = running_example();
    const auto d = decompose(build_mdiagram(t));
    std::vector<int> c1 = {1};
    for (int v = 18; v <= 24; ++v)
        c1.push_back(v);
    c.expect(d.boundary_sets == BoundaryPartition{c1, range(2, 5), range(6, 13), range(14, 17)},
             "component boundary sets");
    const auto fast = orbit_length_fast(t);
    c.expect(fast.symmetry_order == 12, "N = 12");
    c.expect(fast.multiplier == 1, "ell = 1");
    c.expect(fast.orbit_length == 12, "fast orbit length 12");
    c.expect(orbit_length_oracle(t).orbit_length == 12, "oracle orbit length 12");
    return c.outcome("4 components as printed, N=12, ell=1, orbit length 12 by fast and oracle");
}

// --- criterion 2 ----------------------------------------------------------

Outcome golden_periodic_ssyt() {
    Checker c;
    const auto t = periodic_ssyt();
    const auto s = psi(t);
    c.expect(s == Tableau::from_rows({{1, 2, 3, 9, 15, 21},
                                      {4, 7, 8, 10, 16, 22},
                                      {5, 11, 13, 14, 17, 23},
                                      {6, 12, 18, 19, 20, 24}}),
             "psi(T) matches the printed SYT");
    c.expect(orbit_length_fast(s).orbit_length == 6, "fast |O(psi T)| = 6");
    c.expect(orbit_length_oracle(s).orbit_length == 6, "oracle |O(psi T)| = 6");
    const auto report = orbit_length_ssyt(t);
    c.expect(report.period == 3, "R = 3");
    c.expect(report.orbit_length == 3, "formula orbit length 3");
    c.expect(promote_ssyt_k(t, 3) == t, "P^3(T) = T");
    c.expect(orbit_length_ssyt_oracle(t) == 3, "SSYT oracle orbit length 3");
    return c.outcome("psi(T) exact, |O(psi T)|=6 (fast, oracle), R=3, formula 3, P^3(T)=T");
}

// --- criterion 3 ----------------------------------------------------------

Outcome golden_component_promotion() {
    Checker c;
    const auto t = running_example();
    const auto d = decompose(build_mdiagram(t));
    auto comp = [&](int i) { return component_tableau(t, d.boundary_sets[static_cast<std::size_t>(i)]); };
    const auto grid = [](std::vector<std::vector<int>> rows) { return Tableau::from_rows(std::move(rows)); };
    c.expect(component_promote(comp(0), 24).grid == grid({{17, 18}, {19, 20}, {21, 22}, {23, 24}}), "P(T_C1)");
    c.expect(component_promote_k(comp(0), 24, 12).grid == grid({{6, 7}, {8, 9}, {10, 11}, {12, 13}}), "P^12(T_C1)");
    c.expect(component_promote(comp(1), 24).grid == grid({{1}, {2}, {3}, {4}}), "P(T_C2)");
    c.expect(component_promote_k(comp(1), 24, 12).grid == grid({{14}, {15}, {16}, {17}}), "P^12(T_C2)");
    c.expect(component_promote_k(comp(2), 24, 12).grid == grid({{1, 19}, {18, 21}, {20, 23}, {22, 24}}),
             "P^12(T_C3)");
    return c.outcome("P(T_C1), P^12(T_C1), P(T_C2), P^12(T_C2), P^12(T_C3) match");
}

// --- criterion 4 ----------------------------------------------------------

Outcome oracle_sweep() {
    Checker c;
    std::uint64_t tableaux = 0;
    int shapes = 0;
    for (int rows = 1; rows <= 12; ++rows)
        for (int cols = 1; rows * cols <= 12; ++cols) {
            const Shape shape = Shape::rectangle(rows, cols);
            const auto n = static_cast<std::uint64_t>(shape.size());
            ++shapes;
            for_each_syt(shape, [&](const Tableau& t) {
                ++tableaux;
                const auto fast = orbit_length_fast(t).orbit_length;
                const auto slow = orbit_length_oracle(t).orbit_length;
                c.expect(fast == slow, "fast != oracle on " + oneline(t));
                c.expect(n % slow == 0, "orbit length does not divide mn on " + oneline(t));
                c.expect(promote_k(t, n) == t, "P^mn(T) != T on " + oneline(t));
            });
        }
    return c.outcome(std::to_string(shapes) + " rectangles, " + std::to_string(tableaux) +
                     " tableaux: fast = oracle, orbit | mn, P^mn = id");
}

// --- criterion 5 ----------------------------------------------------------

Outcome property_suites() {
    Checker c;
    std::mt19937_64 rng(20240611);
    constexpr int kCases = 1000;
    std::ostringstream summary;

    // rotation preserves noncrossing perfect matchings
    for (int i = 0; i < kCases; ++i) {
        const int k = std::uniform_int_distribution<int>(1, 15)(rng);
        const Matching m(2 * k, oracle::random_noncrossing(k, rng));
        const int shift = std::uniform_int_distribution<int>(1, 2 * k)(rng);
        const auto r = rotate(m, shift);
        c.expect(r.is_noncrossing() && r.is_perfect(), "rotation broke a noncrossing matching");
    }
    summary << "rotation " << kCases;

    // structure of phi on rectangular SYT
    int rect_cases = 0;
    while (rect_cases < kCases) {
        const auto t = oracle::random_syt(oracle::random_rectangle(rng, 6, 8, 40), rng);
        if (t.num_rows() < 2)
            continue;
        ++rect_cases;
        const auto m = build_mdiagram(t);
        c.expect(m.layers().size() == static_cast<std::size_t>(t.num_rows() - 1), "layer count");
        std::vector<int> left_count(t.size() + 1, 0), right_count(t.size() + 1, 0);
        for (std::size_t i = 0; i < m.layers().size(); ++i) {
            const auto& layer = m.layers()[i];
            c.expect(layer.size() == static_cast<std::size_t>(t.row_length(static_cast<int>(i) + 1)),
                     "layer size differs from row length on " + oneline(t));
            c.expect(!layer.has_repetition() && layer.is_noncrossing(), "layer not a noncrossing matching");
            std::vector<int> points;
            for (int r : {static_cast<int>(i), static_cast<int>(i) + 1})
                points.insert(points.end(), t.row(r).begin(), t.row(r).end());
            std::sort(points.begin(), points.end());
            c.expect(layer.is_standard_on(points), "layer not standard on " + oneline(t));
            for (const auto& arc : layer.arcs()) {
                ++left_count[static_cast<std::size_t>(arc.a)];
                ++right_count[static_cast<std::size_t>(arc.b)];
            }
        }
        // first-row entries only open arcs, last-row entries only close them,
        // everything else does both exactly once
        for (int r = 0; r < t.num_rows(); ++r)
            for (int v : t.row(r)) {
                const int want_left = r + 1 < t.num_rows() ? 1 : 0;
                const int want_right = r > 0 ? 1 : 0;
                c.expect(left_count[static_cast<std::size_t>(v)] == want_left &&
                             right_count[static_cast<std::size_t>(v)] == want_right,
                         "endpoint type of " + std::to_string(v) + " in " + oneline(t));
            }
    }
    summary << ", phi structure " << rect_cases;

    // arcs never straddle a uniformly proper subtableau
    int containment_cases = 0;
    for (int round = 0; containment_cases < kCases && round < 100 * kCases; ++round) {
        const auto t = oracle::random_syt(oracle::random_rectangle(rng, 4, 6, 24), rng);
        if (t.num_rows() < 2)
            continue;
        const auto scan = find_uniformly_proper(t);
        if (scan.found.empty())
            continue;
        const auto m = build_mdiagram(t);
        for (const auto& u : scan.found) {
            ++containment_cases;
            for (const auto& arc : m.arcs())
                c.expect(u.interval.contains(arc.a) == u.interval.contains(arc.b),
                         "arc straddles a uniformly proper subtableau in " + oneline(t));
        }
    }
    c.expect(containment_cases >= kCases, "too few uniformly proper subtableaux sampled");
    summary << ", endpoint containment " << containment_cases;

    // promotion shifts the boundary partition by one, and N divides the orbit
    for (int i = 0; i < kCases; ++i) {
        const auto t = oracle::random_syt(oracle::random_rectangle(rng, 5, 6, 30), rng);
        const int n = static_cast<int>(t.size());
        if (t.num_rows() >= 2) {
            const auto before = partition_signature(build_mdiagram(t));
            const auto after = partition_signature(build_mdiagram(promote(t)));
            c.expect(after == canonical_partition(rotate(before, n, 1)), "partition shift fails on " + oneline(t));
        }
        const auto fast = orbit_length_fast(t);
        c.expect(fast.orbit_length % static_cast<std::uint64_t>(*fast.symmetry_order) == 0,
                 "N does not divide the orbit on " + oneline(t));
        c.expect(fast.orbit_length == orbit_length_oracle(t).orbit_length, "fast != oracle on " + oneline(t));
    }
    summary << ", partition shift and N | orbit " << kCases;

    // standardization: injectivity on every shape, commutation with promotion
    // on the rectangular range
    std::uint64_t ssyt = 0, rect_ssyt = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n))
            for_each_composition(n, 4, [&](std::span<const int> e) {
                std::set<Tableau> images;
                std::uint64_t count = 0;
                for_each_column_ssyt(shape, e, [&](const Tableau& t) {
                    ++ssyt;
                    ++count;
                    const auto s = psi(t);
                    images.insert(s);
                    c.expect(is_standard(s) && s.shape() == t.shape(), "psi output on " + oneline(t));
                    if (!shape.is_rectangular())
                        return;
                    ++rect_ssyt;
                    c.expect(psi(promote_ssyt(t)) == promote_k(s, static_cast<std::uint64_t>(e[0])),
                             "psi(P(T)) != P^e1(psi(T)) on " + oneline(t));
                });
                c.expect(images.size() == count, "psi not injective on shape " + shape.to_string());
            });
    summary << ", psi injectivity " << ssyt << " SSYT, commutation " << rect_ssyt << " rectangular SSYT";
    return c.outcome(summary.str() + " (" + std::to_string(c.checks()) + " checks)");
}

// --- criterion 6 ----------------------------------------------------------

Outcome hook_length_counts() {
    Checker c;
    int shapes = 0;
    std::uint64_t tableaux = 0;
    for (int n = 1; n <= 16; ++n)
        for (const auto& shape : partitions_of(n)) {
            ++shapes;
            std::uint64_t count = 0;
            for_each_syt_cells(shape, [&](std::span<const int>) { ++count; });
            tableaux += count;
            c.expect(count == hook_length_count(shape), "count mismatch on " + shape.to_string());
        }
    return c.outcome("all " + std::to_string(shapes) + " shapes with 1..16 boxes, " + std::to_string(tableaux) +
                     " tableaux enumerated");
}

// --- criterion 7 ----------------------------------------------------------

Outcome ssyt_formula_sweep() {
    Checker c;
    std::uint64_t rectangular = 0, extended = 0, constant_content = 0, outside = 0, outside_divergent = 0;
    std::string outside_example;
    auto check_inside = [&](const Tableau& t, const SsytOrbitReport& report, std::uint64_t oracle_length) {
        c.expect(report.in_validated_domain, "input unexpectedly outside the validated domain: " + oneline(t));
        c.expect(report.orbit_length == oracle_length, "formula " + std::to_string(report.orbit_length) +
                                                           " vs oracle " + std::to_string(oracle_length) + " on " +
                                                           oneline(t));
    };

    // the criterion's range: every column SSYT with <= 8 boxes and <= 4 values
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n))
            for_each_composition(n, 4, [&](std::span<const int> e) {
                for_each_column_ssyt(shape, e, [&](const Tableau& t) {
                    const auto oracle_length = orbit_length_ssyt_oracle(t);
                    c.expect(oracle_length % static_cast<std::uint64_t>(content_period(e)) == 0,
                             "R does not divide the orbit on " + oneline(t));
                    if (shape.is_rectangular()) {
                        ++rectangular;
                        check_inside(t, orbit_length_ssyt(t), oracle_length);
                        return;
                    }
                    const auto report = orbit_length_ssyt(t, std::nullopt, true);
                    if (report.in_validated_domain) {
                        ++constant_content;
                        check_inside(t, report, oracle_length);
                        return;
                    }
                    ++outside;
                    if (report.orbit_length != oracle_length) {
                        ++outside_divergent;
                        if (outside_example.empty())
                            outside_example = oneline(t) + " formula " + std::to_string(report.orbit_length) +
                                              " oracle " + std::to_string(oracle_length);
                    }
                });
            });
    // larger rectangles with up to 6 values
    for (int rows = 1; rows <= 12; ++rows)
        for (int cols = 1; rows * cols <= 12; ++cols) {
            const Shape shape = Shape::rectangle(rows, cols);
            const int n = static_cast<int>(shape.size());
            if (n <= 8)
                continue;
            for_each_composition(n, 6, [&](std::span<const int> e) {
                for_each_column_ssyt(shape, e, [&](const Tableau& t) {
                    ++extended;
                    check_inside(t, orbit_length_ssyt(t), orbit_length_ssyt_oracle(t));
                });
            });
        }
    // standard tableaux read as SSYT: constant content, so R = 1 and the
    // formula reduces to the SYT orbit length
    for (int rows = 1; rows <= 12; ++rows)
        for (int cols = 1; rows * cols <= 12; ++cols)
            for_each_syt(Shape::rectangle(rows, cols), [&](const Tableau& t) {
                ++constant_content;
                const auto report = orbit_length_ssyt(t);
                c.expect(report.period == 1, "all-ones content must have R = 1");
                check_inside(t, report, orbit_length_oracle(t).orbit_length);
            });
    c.expect(outside_divergent > 0 || outside == 0, "expected divergences outside the validated domain");

    std::ostringstream summary;
    summary << "validated domain = rectangular shapes, or any shape with every value occurring once; "
            << "agreement on " << rectangular << " rectangular SSYT (<= 8 boxes, <= 4 values), " << extended
            << " rectangular SSYT (9..12 boxes, <= 6 values), " << constant_content
            << " multiplicity-free tableaux; outside the domain " << outside_divergent << " of " << outside
            << " non-rectangular SSYT diverge (e.g. " << outside_example << ")";
    return c.outcome(summary.str());
}

// --- criterion 8 ----------------------------------------------------------

std::string run_command(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("cannot run " + command);
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        out.append(buffer.data(), got);
    const int status = pclose(pipe);
    out += "\n[exit " + std::to_string(status) + "]";
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
    Checker c;
    const std::string cli = CLI_PATH;
    const std::string running = std::string(TEST_DATA_DIR) + "/running_example.txt";
    const std::string periodic = std::string(TEST_DATA_DIR) + "/periodic_ssyt.txt";
    const std::vector<std::string> commands = {
        "validate --input " + running,
        "validate --kind column-ssyt --input " + periodic,
        "promote -k 5 --input " + running,
        "mdiagram --text --input " + running,
        "mdiagram --svg - --input " + running,
        "components --input " + running,
        "orbit --method fast --input " + running,
        "orbit --method oracle --input " + running,
        "orbit --method both --input " + running,
        "ssyt-orbit --method formula --input " + periodic,
        "ssyt-orbit --method both --input " + periodic,
        "census --shape 3x4 --method both",
        "verify --shape 2x3 --method both",
    };
    for (const auto& args : commands) {
        const std::string command = "\"" + cli + "\" " + args + " 2>/dev/null";
        const auto first = run_command(command);
        const auto second = run_command(command);
        c.expect(first == second, "output differs between runs of: " + args);
        c.expect(first.find("[exit 0]") != std::string::npos, "nonzero exit from: " + args);
    }

    const auto dir = std::filesystem::temp_directory_path() / ("tableau_orbits_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::string svgs[2];
    for (int i = 0; i < 2; ++i) {
        const auto path = dir / ("diagram" + std::to_string(i) + ".svg");
        run_command("\"" + cli + "\" mdiagram --svg \"" + path.string() + "\" --input " + running);
        svgs[i] = read_file(path);
    }
    std::filesystem::remove_all(dir);
    c.expect(!svgs[0].empty() && svgs[0] == svgs[1], "SVG files differ between runs");
    return c.outcome(std::to_string(commands.size()) + " commands and SVG file output byte-identical across runs");
}

} // namespace

int main() {
    int failures = 0;
    failures += run_criterion(1, "running example golden", 1.0, golden_running_example);
    failures += run_criterion(2, "periodic-content SSYT golden", 1.0, golden_periodic_ssyt);
    failures += run_criterion(3, "component promotion goldens", 1.0, golden_component_promotion);
    failures += run_criterion(4, "fast vs oracle exhaustive sweep, mn <= 12", 60.0, oracle_sweep);
    failures += run_criterion(5, "property suites", 120.0, property_suites);
    failures += run_criterion(6, "enumeration vs hook-length formula, <= 16 boxes", 300.0, hook_length_counts);
    failures += run_criterion(7, "SSYT orbit formula vs oracle", 120.0, ssyt_formula_sweep);
    failures += run_criterion(8, "CLI determinism", 60.0, cli_determinism);
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
