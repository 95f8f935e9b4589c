// Command-line front end: analyze / decompose / table / verify / construct.
// JSON reports on stdout, human-readable summaries on stderr.
// Exit codes: 0 success, 2 parse error, 3 format violation, 4 resource guard.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eaqec/code.hpp"
#include "eaqec/statevector.hpp"

using json = nlohmann::ordered_json;
using namespace eaqec;
namespace fs = std::filesystem;

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a 64-bit over the raw file bytes; stable across runs and platforms.
std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

enum class InputFormat { Gf4, Symplectic };

InputFormat pick_format(const std::string& path, bool gf4_flag, bool sym_flag) {
    if (gf4_flag && sym_flag) throw CliError{3, "--gf4 and --symplectic are mutually exclusive"};
    if (gf4_flag) return InputFormat::Gf4;
    if (sym_flag) return InputFormat::Symplectic;
    std::string ext = fs::path(path).extension().string();
    if (ext == ".g4") return InputFormat::Gf4;
    if (ext == ".sym") return InputFormat::Symplectic;
    throw CliError{3, "cannot infer format of '" + path + "': use --gf4 or --symplectic"};
}

struct LoadedCode {
    EaqecCode code;
    std::string digest;
    InputFormat format;
};

LoadedCode load_code(const std::string& path, bool gf4_flag, bool sym_flag) {
    InputFormat fmt = pick_format(path, gf4_flag, sym_flag);
    std::string text = read_file(path);
    LoadedCode out;
    out.digest = digest_hex(text);
    out.format = fmt;
    if (fmt == InputFormat::Gf4) {
        Gf4Matrix h4;
        try {
            h4 = parse_gf4_text(text);
        } catch (const std::exception& e) {
            throw CliError{2, std::string("parse error: ") + e.what()};
        }
        if (h4.nrows() == 0) throw CliError{2, "parse error: no rows in '" + path + "'"};
        try {
            out.code = from_gf4(QuaternaryCode::from_parity_check(h4));
        } catch (const std::exception& e) {
            throw CliError{3, std::string("format violation: ") + e.what()};
        }
    } else {
        BinMatrix h;
        try {
            h = parse_matrix_text(text);
        } catch (const std::exception& e) {
            throw CliError{2, std::string("parse error: ") + e.what()};
        }
        if (h.nrows() == 0) throw CliError{2, "parse error: no rows in '" + path + "'"};
        try {
            out.code = from_check_matrix(h);
        } catch (const std::exception& e) {
            throw CliError{3, std::string("format violation: ") + e.what()};
        }
    }
    return out;
}

json input_json(const std::string& path, const std::string& digest) {
    return json{{"path", path}, {"digest", digest}};
}

/// The schema block {n, k, c, ell, d?, degenerate?, dual_containing,
/// net_rate, singleton, hamming?}; distance-dependent fields are present
/// only when the search finished under the cap.
json code_json(const EaqecCode& code, const DistanceResult& dist) {
    json j;
    j["n"] = code.n;
    j["k"] = code.k;
    j["c"] = code.c;
    j["ell"] = code.ell;
    if (dist.exceeds_cap) {
        j["d_exceeds_cap"] = true;
    } else {
        j["d"] = dist.d;
        j["degenerate"] = dist.degenerate;
        if (dist.stabilizer_weight) j["stabilizer_weight"] = true;
    }
    j["dual_containing"] = is_dual_containing(code);
    j["net_rate"] = net_rate(code).to_string();
    if (!dist.exceeds_cap) {
        SingletonCheck s = singleton_check(code, dist);
        j["singleton"] = json{{"holds", s.holds}, {"saturated", s.saturated}};
        if (auto hm = hamming_check(code, dist)) j["hamming"] = *hm;
    }
    return j;
}

void print_summary(const EaqecCode& code, const DistanceResult& dist) {
    std::ostringstream ss;
    ss << "[[" << code.n << "," << code.k << ",";
    if (dist.exceeds_cap)
        ss << ">cap";
    else
        ss << dist.d;
    ss << ";" << code.c << "]] EAQEC code";
    if (!dist.exceeds_cap && dist.degenerate) ss << " (degenerate)";
    if (!dist.exceeds_cap && dist.stabilizer_weight) ss << " (stabilizer weight)";
    ss << ", net rate " << net_rate(code).to_string();
    std::cerr << ss.str() << "\n";
}

int cmd_analyze(const std::string& path, bool gf4_flag, bool sym_flag, std::size_t cap) {
    LoadedCode lc = load_code(path, gf4_flag, sym_flag);
    DistanceResult dist = distance(lc.code, cap);
    json j;
    j["command"] = "analyze";
    j["input"] = input_json(path, lc.digest);
    j["distance_cap"] = cap;
    j["code"] = code_json(lc.code, dist);
    j["h"] = format_matrix_text(lc.code.h, lc.code.n);
    std::cout << j.dump(2) << "\n";
    print_summary(lc.code, dist);
    return 0;
}

const char* origin_name(PairOrigin o) {
    switch (o) {
        case PairOrigin::Symplectic: return "symplectic";
        case PairOrigin::Isotropic: return "isotropic";
        default: return "outside";
    }
}

int cmd_decompose(const std::string& path, bool gf4_flag, bool sym_flag) {
    LoadedCode lc = load_code(path, gf4_flag, sym_flag);
    const SympDecomposition& d = lc.code.decomp;
    // Re-check the hyperbolic-pair invariants before printing anything.
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        for (std::size_t j = 0; j < d.pairs.size(); ++j) {
            bool uv = symp_product(d.pairs[i].u, d.pairs[j].v);
            bool uu = symp_product(d.pairs[i].u, d.pairs[j].u);
            bool vv = symp_product(d.pairs[i].v, d.pairs[j].v);
            if (uv != (i == j) || uu || vv)
                throw CliError{3, "format violation: decomposition failed its own invariants"};
        }
    }
    if (!verify_symplectomorphism(lc.code.upsilon))
        throw CliError{3, "format violation: Upsilon is not a symplectomorphism"};
    json pairs = json::array();
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        pairs.push_back(json{{"origin", origin_name(d.origins[i])},
                             {"u", d.pairs[i].u.to_row().to_string()},
                             {"v", d.pairs[i].v.to_row().to_string()}});
    }
    json j;
    j["command"] = "decompose";
    j["input"] = input_json(path, lc.digest);
    j["n"] = d.n;
    j["c"] = d.c;
    j["ell"] = d.ell;
    j["pairs"] = pairs;
    j["upsilon"] = format_matrix_text(lc.code.upsilon, d.n);
    std::cout << j.dump(2) << "\n";
    std::cerr << "decomposition: c=" << d.c << " ell=" << d.ell << " over n=" << d.n << "\n";
    return 0;
}

struct MetaInfo {
    std::optional<long> n, k, d;
};

MetaInfo parse_meta(const std::string& text) {
    MetaInfo m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
        };
        strip(key);
        strip(val);
        try {
            long v = std::stol(val);
            if (key == "n") m.n = v;
            else if (key == "k") m.k = v;
            else if (key == "d") m.d = v;
        } catch (const std::exception&) {
            throw CliError{2, "parse error in meta line: " + line};
        }
    }
    return m;
}

int cmd_table(const std::string& corpus, std::size_t cap) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(corpus, ec)) {
        std::string ext = entry.path().extension().string();
        if (ext == ".g4" || ext == ".sym") files.push_back(entry.path());
    }
    if (ec) throw CliError{2, "cannot read corpus directory '" + corpus + "'"};
    std::sort(files.begin(), files.end());

    json rows = json::array();
    for (const auto& f : files) {
        LoadedCode lc = load_code(f.string(), false, false);
        MetaInfo meta;
        fs::path meta_path = f;
        meta_path.replace_extension(".meta");
        if (fs::exists(meta_path)) meta = parse_meta(read_file(meta_path.string()));
        std::size_t row_cap = cap;
        if (meta.d && static_cast<std::size_t>(*meta.d) >= row_cap)
            row_cap = static_cast<std::size_t>(*meta.d) + 1;
        DistanceResult dist = distance(lc.code, row_cap);
        json row;
        row["file"] = f.filename().string();
        row["n"] = lc.code.n;
        row["k"] = lc.code.k;
        row["c"] = lc.code.c;
        row["k_minus_c"] = static_cast<long>(lc.code.k) - static_cast<long>(lc.code.c);
        if (dist.exceeds_cap) {
            row["d_exceeds_cap"] = true;
        } else {
            row["d"] = dist.d;
            row["degenerate"] = dist.degenerate;
        }
        json declared;
        if (meta.n) declared["n"] = *meta.n;
        if (meta.k) declared["k"] = *meta.k;
        if (meta.d) declared["d"] = *meta.d;
        row["declared"] = declared;
        if (meta.d && !dist.exceeds_cap)
            row["d_matches_declared"] = (static_cast<long>(dist.d) == *meta.d);
        rows.push_back(row);
    }
    json j;
    j["command"] = "table";
    j["corpus"] = corpus;
    j["distance_cap"] = cap;
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    std::cerr << "table: " << rows.size() << " corpus rows\n";
    return 0;
}

std::vector<PauliClass> build_error_list(const std::string& spec, std::size_t n) {
    std::vector<PauliClass> errors;
    if (spec.rfind("weight:", 0) == 0) {
        std::size_t w = 0;
        try {
            w = static_cast<std::size_t>(std::stoul(spec.substr(7)));
        } catch (const std::exception&) {
            throw CliError{2, "parse error: bad --errors value '" + spec + "'"};
        }
        // All Paulis of weight exactly w: supports of size w, 3 letters each.
        std::vector<std::size_t> support(w);
        auto emit = [&](auto&& self, std::size_t depth, std::size_t start,
                        SympVector acc) -> void {
            if (depth == w) {
                errors.push_back(PauliClass(acc));
                return;
            }
            for (std::size_t q = start; q < n; ++q) {
                for (int letter = 1; letter <= 3; ++letter) {
                    SympVector next = acc;
                    next.z.set(q, letter & 2);
                    next.x.set(q, letter & 1);
                    self(self, depth + 1, q + 1, next);
                }
            }
        };
        if (w == 0)
            errors.push_back(PauliClass(SympVector(BitVector(n), BitVector(n))));
        else
            emit(emit, 0, 0, SympVector(BitVector(n), BitVector(n)));
    } else {
        std::istringstream in(spec);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            PauliClass p = [&] {
                try {
                    return parse_pauli(tok);
                } catch (const std::exception& e) {
                    throw CliError{2, std::string("parse error: ") + e.what()};
                }
            }();
            if (p.n() != n)
                throw CliError{3, "format violation: error '" + tok + "' has wrong length"};
            errors.push_back(p);
        }
    }
    return errors;
}

json state_json(const StateVec& s) {
    json arr = json::array();
    for (const Complex& a : s.amp) arr.push_back(json::array({a.real(), a.imag()}));
    return arr;
}

int cmd_verify(const std::string& path, bool gf4_flag, bool sym_flag, const std::string& errors,
               std::uint64_t seed, bool dump) {
    LoadedCode lc = load_code(path, gf4_flag, sym_flag);
    const EaqecCode& code = lc.code;

    // A seeded random message exercises superpositions, not just basis kets.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    StateVec msg(code.k);
    for (Complex& a : msg.amp) a = Complex(gauss(rng), gauss(rng));
    msg.normalize();

    StateVec clean = encode(code, msg);
    std::vector<PauliClass> error_list = build_error_list(errors, code.n);
    auto alice = [&] {
        std::vector<std::size_t> q(code.n);
        for (std::size_t i = 0; i < code.n; ++i) q[i] = i;
        return q;
    }();

    json results = json::array();
    std::size_t passed = 0;
    for (const PauliClass& e : error_list) {
        StateVec corrupted = apply_pauli(clean, true_pauli(e.vec), alice);
        DecodeResult dec = decode(code, corrupted);
        double fidelity = std::abs(overlap(dec.message, msg));
        bool syndrome_ok = dec.syndrome == reduced_syndrome(code, e.vec);
        bool ok = !dec.miscorrection && fidelity >= 1.0 - 1e-9 && syndrome_ok;
        passed += ok;
        results.push_back(json{{"error", render_pauli(e)},
                               {"pass", ok},
                               {"fidelity", fidelity},
                               {"syndrome", dec.syndrome.to_string()},
                               {"syndrome_matches", syndrome_ok}});
    }

    json j;
    j["command"] = "verify";
    j["input"] = input_json(path, lc.digest);
    j["errors"] = errors;
    j["seed"] = seed;
    j["passed"] = passed;
    j["total"] = error_list.size();
    j["results"] = results;
    if (dump) {
        j["dump"] = json{{"message", state_json(msg)}, {"encoded", state_json(clean)}};
    }
    std::cout << j.dump(2) << "\n";
    std::cerr << passed << "/" << error_list.size() << " round trips pass\n";
    return 0;
}

int cmd_construct(const std::string& op, const std::vector<std::string>& paths, bool gf4_flag,
                  bool sym_flag, std::size_t position, std::size_t cap) {
    json j;
    j["command"] = "construct";
    j["operation"] = op;
    EaqecCode result;
    if (op == "extend" || op == "puncture") {
        if (paths.size() != 1) throw CliError{3, op + " takes exactly one input"};
        LoadedCode lc = load_code(paths[0], gf4_flag, sym_flag);
        j["input"] = input_json(paths[0], lc.digest);
        result = op == "extend" ? extend(lc.code) : puncture(lc.code, position);
        if (op == "puncture") j["position"] = position;
    } else if (op == "combine") {
        if (paths.size() != 2) throw CliError{3, "combine takes a code and a seed"};
        LoadedCode lc = load_code(paths[0], gf4_flag, sym_flag);
        LoadedCode seed = load_code(paths[1], false, false);
        j["input"] = input_json(paths[0], lc.digest);
        j["seed_input"] = input_json(paths[1], seed.digest);
        result = catalytic_combine(lc.code, seed.code);
    } else {
        throw CliError{3, "unknown construct operation '" + op + "'"};
    }
    DistanceResult dist = distance(result, cap);
    j["distance_cap"] = cap;
    j["code"] = code_json(result, dist);
    j["h"] = format_matrix_text(result.h, result.n);
    std::cout << j.dump(2) << "\n";
    print_summary(result, dist);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement-assisted quantum error correcting code toolkit"};
    app.require_subcommand(1);

    std::string path, corpus, errors = "weight:1", op;
    std::vector<std::string> construct_paths;
    bool gf4_flag = false, sym_flag = false, dump = false;
    std::size_t cap = 8, position = 0;
    std::uint64_t seed = 0;

    auto add_format_flags = [&](CLI::App* sub) {
        sub->add_flag("--gf4", gf4_flag, "input is a GF(4) parity check matrix");
        sub->add_flag("--symplectic", sym_flag, "input is a binary symplectic matrix");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full parameter and bounds report");
    analyze->add_option("path", path)->required();
    add_format_flags(analyze);
    analyze->add_option("--distance-cap", cap, "stop the distance search at this weight");

    CLI::App* decompose = app.add_subcommand("decompose", "hyperbolic-pair decomposition");
    decompose->add_option("path", path)->required();
    add_format_flags(decompose);

    CLI::App* table = app.add_subcommand("table", "recompute the corpus parameter table");
    table->add_option("--corpus", corpus, "corpus directory")->required();
    table->add_option("--distance-cap", cap);

    CLI::App* verify = app.add_subcommand("verify", "encode/error/decode round trips");
    verify->add_option("path", path)->required();
    add_format_flags(verify);
    verify->add_option("--errors", errors, "weight:W or a comma-separated Pauli list");
    verify->add_option("--seed", seed, "message RNG seed");
    verify->add_flag("--dump", dump, "include state amplitudes in the report");

    CLI::App* construct = app.add_subcommand("construct", "extend / puncture / combine");
    construct->add_option("operation", op)->required();
    construct->add_option("inputs", construct_paths)->required();
    add_format_flags(construct);
    construct->add_option("--position", position, "puncture coordinate");
    construct->add_option("--distance-cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(path, gf4_flag, sym_flag, cap);
        if (decompose->parsed()) return cmd_decompose(path, gf4_flag, sym_flag);
        if (table->parsed()) return cmd_table(corpus, cap);
        if (verify->parsed()) return cmd_verify(path, gf4_flag, sym_flag, errors, seed, dump);
        if (construct->parsed())
            return cmd_construct(op, construct_paths, gf4_flag, sym_flag, position, cap);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << " (set EAQEC_MAX_QUBITS to raise the guard)\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
