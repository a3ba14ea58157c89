// quandle: command-line front end for the finite-quandle library.
//
// Exit codes: 0 success; 1 property failure (axiom violation, not
// isomorphic, conjecture counterexample, strict-mode mismatch); 2 usage or
// format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quandle/alexander.hpp"
#include "quandle/analysis.hpp"
#include "quandle/census.hpp"
#include "quandle/io.hpp"
#include "quandle/quandle.hpp"

#include "table1_fixture.hpp"

namespace {

using nlohmann::ordered_json;
using namespace quandle;

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot read file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

FiniteQuandle load(const std::string& path, bool raw) { return parse(read_file(path), raw); }

ordered_json axiom_json(const AxiomReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["q1_ok"] = r.q1_ok;
    j["q2_ok"] = r.q2_ok;
    j["q3_ok"] = r.q3_ok;
    j["quandle"] = r.all_ok();
    if (r.q1_witness) j["q1_witness"] = *r.q1_witness;
    if (r.q2_witness) j["q2_witness"] = *r.q2_witness;
    if (r.q3_witness) j["q3_witness"] = *r.q3_witness;
    return j;
}

int cmd_verify(const std::string& file, bool json) {
    FiniteQuandle q = load(file, /*raw=*/true);
    AxiomReport rep = q.verify();
    if (json)
        std::cout << axiom_json(rep).dump() << '\n';
    else
        std::cout << rep.describe();
    return rep.all_ok() ? 0 : 1;
}

int cmd_analyze(const std::string& file, bool json) {
    FiniteQuandle q = load(file, /*raw=*/false);
    AnalysisReport rep = analyze(q);
    if (json)
        std::cout << rep.to_json() << '\n';
    else
        std::cout << rep.describe();
    return 0;
}

int cmd_alexander(int n, int a, const std::string& out, bool json) {
    FiniteQuandle q = linear_alexander(n, a);
    std::string text = json ? serialize_json(q) + "\n" : serialize(q);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw FormatError("cannot write file: " + out);
        f << text;
    }
    return 0;
}

ordered_json record_json(const ClassificationRecord& rec) {
    ordered_json j;
    j["p"] = rec.p;
    j["count"] = rec.count;
    j["roots"] = rec.roots;
    j["dual_pairs"] = rec.dual_pairs;
    return j;
}

int cmd_classify(int p, bool json) {
    ClassificationRecord rec = classify_prime(p);
    if (json) {
        std::cout << record_json(rec).dump() << '\n';
    } else {
        std::cout << "p: " << rec.p << '\n';
        std::cout << "count " << rec.count << ": " << rec.pairs_string() << '\n';
        std::cout << "roots:";
        for (int r : rec.roots) std::cout << ' ' << r;
        std::cout << '\n';
    }
    return 0;
}

int cmd_table(int p_max, bool json, bool strict) {
    std::vector<ClassificationRecord> rows = table_rows(p_max);
    std::string plain = format_table(rows);
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rec : rows) arr.push_back(record_json(rec));
        std::cout << arr.dump() << '\n';
    } else {
        std::cout << plain;
    }
    if (strict && plain != kTable1Fixture) {
        std::cerr << "strict: output differs from the bundled classification table\n";
        return 1;
    }
    return 0;
}

int cmd_census(int n, bool connected, bool conjecture, bool json) {
    if (conjecture) {
        ConjectureReport rep = check_conjecture(n);
        if (json) {
            ordered_json j;
            j["n"] = rep.n;
            j["classes"] = rep.classes;
            j["two_point_homogeneous_classes"] = static_cast<int>(rep.tph_classes.size());
            ordered_json ces = ordered_json::array();
            for (const auto& q : rep.counterexamples) ces.push_back(q.table());
            j["counterexamples"] = ces;
            j["holds"] = rep.holds();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "n: " << rep.n << '\n';
            std::cout << "classes: " << rep.classes << '\n';
            std::cout << "two_point_homogeneous_classes: " << rep.tph_classes.size() << '\n';
            if (rep.holds()) {
                std::cout << "no counterexample\n";
            } else {
                for (const auto& q : rep.counterexamples) {
                    std::cout << "counterexample:\n" << serialize(q) << analyze(q).describe();
                }
                std::cout << "counterexamples: " << rep.counterexamples.size() << '\n';
            }
        }
        return rep.holds() ? 0 : 1;
    }

    CensusResult res = enumerate_quandles(n, connected);
    if (json) {
        ordered_json j;
        j["n"] = res.n;
        j["labeled"] = res.total_labeled;
        j["classes"] = static_cast<int>(res.iso_classes.size());
        j["connected"] = res.connected_count;
        j["two_point_homogeneous"] = res.tph_count;
        j["cyclic_type"] = res.cyclic_count;
        ordered_json reps = ordered_json::array();
        for (const auto& q : res.iso_classes) reps.push_back(q.table());
        j["class_reps"] = reps;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "n: " << res.n << '\n';
        std::cout << "labeled: " << res.total_labeled << '\n';
        std::cout << "classes: " << res.iso_classes.size() << '\n';
        std::cout << "connected: " << res.connected_count << '\n';
        std::cout << "two_point_homogeneous: " << res.tph_count << '\n';
        std::cout << "cyclic_type: " << res.cyclic_count << '\n';
        for (std::size_t i = 0; i < res.iso_classes.size(); ++i) {
            if (i > 0) std::cout << "---\n";
            std::cout << serialize(res.iso_classes[i]);
        }
    }
    return 0;
}

int cmd_iso(const std::string& file_a, const std::string& file_b, bool json) {
    FiniteQuandle a = load(file_a, /*raw=*/false);
    FiniteQuandle b = load(file_b, /*raw=*/false);
    std::optional<Permutation> w = isomorphism(a, b);
    if (json) {
        ordered_json j;
        j["isomorphic"] = w.has_value();
        if (w) j["witness"] = w->images();
        std::cout << j.dump() << '\n';
    } else if (w) {
        std::cout << "isomorphic: " << w->one_line_string() << '\n';
    } else {
        std::cout << "not isomorphic\n";
    }
    return w ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite quandle toolkit: axiom checks, inner groups, "
                 "two-point homogeneity, classification, census"};
    app.require_subcommand(1);

    bool json = false, strict = false;
    app.add_flag("--json", json, "emit JSON instead of plain text");
    app.add_flag("--strict", strict,
                 "table: byte-compare the plain output against the bundled fixture");

    auto* verify_cmd = app.add_subcommand("verify", "check the quandle axioms on a table file");
    std::string verify_file;
    verify_cmd->add_option("file", verify_file, "table file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "full structural report for a quandle");
    std::string analyze_file;
    analyze_cmd->add_option("file", analyze_file, "table file")->required();

    auto* alex_cmd =
        app.add_subcommand("alexander", "emit the linear Alexander quandle on Z_n with multiplier a");
    int alex_n = 0, alex_a = 0;
    std::string alex_out;
    alex_cmd->add_option("n", alex_n, "number of points")->required();
    alex_cmd->add_option("a", alex_a, "multiplier, coprime to n")->required();
    alex_cmd->add_option("--out", alex_out, "write the table to this file instead of stdout");

    auto* classify_cmd =
        app.add_subcommand("classify", "two-point homogeneous quandles of prime order p");
    int classify_p = 0;
    classify_cmd->add_option("p", classify_p, "odd prime")->required();

    auto* table_cmd =
        app.add_subcommand("table", "classification rows for every prime 3 <= p <= p_max");
    int table_pmax = 0;
    table_cmd->add_option("p_max", table_pmax, "largest prime to include")->required();

    auto* census_cmd = app.add_subcommand("census", "enumerate quandles of order n up to isomorphism");
    int census_n = 0;
    bool census_connected = false, census_conjecture = false;
    census_cmd->add_option("n", census_n, "order, 1..6")->required();
    census_cmd->add_flag("--connected", census_connected, "list only connected classes");
    census_cmd->add_flag("--check-conjecture", census_conjecture,
                         "test that every two-point homogeneous class is of cyclic type");

    auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two quandle files");
    std::string iso_a, iso_b;
    iso_cmd->add_option("fileA", iso_a, "first table file")->required();
    iso_cmd->add_option("fileB", iso_b, "second table file")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    int rc = 0;
    verify_cmd->callback([&] { rc = cmd_verify(verify_file, json); });
    analyze_cmd->callback([&] { rc = cmd_analyze(analyze_file, json); });
    alex_cmd->callback([&] { rc = cmd_alexander(alex_n, alex_a, alex_out, json); });
    classify_cmd->callback([&] { rc = cmd_classify(classify_p, json); });
    table_cmd->callback([&] { rc = cmd_table(table_pmax, json, strict); });
    census_cmd->callback(
        [&] { rc = cmd_census(census_n, census_connected, census_conjecture, json); });
    iso_cmd->callback([&] { rc = cmd_iso(iso_a, iso_b, json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help is a success; anything else is a usage error
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const AxiomError& e) {
        // The input parsed but is not a quandle; report like `verify`.
        if (json)
            std::cout << axiom_json(e.report()).dump() << '\n';
        else
            std::cout << e.report().describe();
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
