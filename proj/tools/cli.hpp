/*
   Copyright 2026 The popuc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POPUC_TOOLS_CLI_HPP
#define POPUC_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <popuc/popuc.hpp>

#include "tables.hpp"

namespace popuc::cli {

enum ExitStatus : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct SeedFlags {
    std::optional<std::uint64_t> cyclotomic;
    std::optional<std::uint64_t> anticyclotomic;
    std::optional<std::string> factors;
    std::optional<std::uint64_t> adjoined;
    std::optional<std::string> poly;
};

struct Seed {
    RatPoly poly;
    KroneckerSpec spec;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<std::uint64_t> parse_index_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(piece, &used);
        } catch (const std::exception&) {
            throw UsageError("bad index '" + piece + "' in list '" + text + "'");
        }
        if (used != piece.size() || piece.find('-') != std::string::npos)
            throw UsageError("bad index '" + piece + "' in list '" + text + "'");
        out.push_back(v);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline void add_seed_flags(CLI::App& cmd, SeedFlags& flags)
{
    auto* group = cmd.add_option_group("seed", "Kronecker seed polynomial (exactly one)");
    group->add_option("--cyclotomic", flags.cyclotomic, "cyclotomic polynomial C_M");
    group->add_option("--anticyclotomic", flags.anticyclotomic, "anti-cyclotomic polynomial (z^M - 1)/C_M");
    group->add_option("--factors", flags.factors, "product of distinct C_m, e.g. 1,5 for z^5 - 1");
    group->add_option("--adjoined", flags.adjoined, "(z + 1)(z^{M-1} + ... + 1), M odd");
    group->add_option("--poly", flags.poly, "raw coefficients, ascending: \"1, 0, 0, 1\"");
    group->require_option(1);
}

inline Seed resolve_seed(const SeedFlags& f)
{
    if (f.cyclotomic) {
        if (*f.cyclotomic == 0)
            throw UsageError("--cyclotomic needs M >= 1");
        return {cyclotomic(*f.cyclotomic), KroneckerSpec({*f.cyclotomic})};
    }
    if (f.anticyclotomic)
        return {anticyclotomic(*f.anticyclotomic), anticyclotomic_spec(*f.anticyclotomic)};
    if (f.factors) {
        KroneckerSpec spec(parse_index_list(*f.factors));
        return {kronecker_from_spec(spec), spec};
    }
    if (f.adjoined)
        return {adjoined_kronecker(*f.adjoined), adjoined_spec(*f.adjoined)};
    RatPoly p = io::parse_poly(*f.poly);
    KroneckerSpec spec = decompose_kronecker(p);
    return {std::move(p), std::move(spec)};
}

inline void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream os(path);
    if (!os)
        throw UsageError("cannot open '" + path + "' for writing");
    os << contents;
}

inline int run_tables(std::ostream& out)
{
    bool all = true;
    for (const auto& t : tables::reference_tables()) {
        const SturmChain c = build_chain(cyclotomic(t.M));
        std::vector<std::string> diffs;
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            const std::size_t n = t.first + i;
            const std::string got = n < c.verblunsky.size() ? to_string(c.verblunsky[n]) : "<missing>";
            if (got != t.values[i])
                diffs.push_back("a_" + std::to_string(n) + ": expected " + t.values[i] + " got " + got);
        }
        out << t.name << " a_" << t.first << "..a_" << t.first + t.values.size() - 1 << ": "
            << (diffs.empty() ? "ok" : "DIFF") << "\n";
        for (const auto& d : diffs)
            out << "  " << d << "\n";
        all = all && diffs.empty();
    }
    return all ? kOk : kFailed;
}

inline std::string pair_line(const PairReport& r)
{
    auto range = [](const IndexRange& x) {
        return x.empty ? std::string("[]") : "[" + std::to_string(x.first) + "," + std::to_string(x.last) + "]";
    };
    std::string s = "p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) + " N=" + std::to_string(r.N) +
                    " head=" + range(r.head_range) + " tail=" + range(r.tail_range) + " " + (r.pass ? "PASS" : "FAIL");
    for (const auto& m : r.mismatches)
        s += "\n  a_" + std::to_string(m.index) + ": predicted " + to_string(m.predicted) + " actual " + to_string(m.actual);
    for (const auto& c : r.conflicts)
        s += "\n  overlap conflict at a_" + std::to_string(c.index) + ": head " + to_string(c.head) + " tail " +
             to_string(c.tail);
    return s;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Para-orthogonal polynomials on the unit circle from Kronecker seeds"};
    app.name("popuc");
    app.require_subcommand(1);

    std::uint64_t cyclo_m = 0, anti_m = 0;
    auto* cyclo = app.add_subcommand("cyclo", "print the coefficients of C_M");
    cyclo->add_option("M", cyclo_m)->required();
    auto* anti = app.add_subcommand("anti", "print the coefficients of (z^M - 1)/C_M");
    anti->add_option("M", anti_m)->required();

    SeedFlags chain_seed, verify_seed, weights_seed;
    std::string chain_json, chain_csv;
    auto* chain = app.add_subcommand("chain", "print the Verblunsky coefficients of the Sturmian chain");
    add_seed_flags(*chain, chain_seed);
    chain->add_option("--json", chain_json, "write the full chain as JSON");
    chain->add_option("--csv", chain_csv, "write the Verblunsky sequence as CSV");

    std::optional<double> tol;
    auto* verify = app.add_subcommand("verify", "check discrete orthogonality at the seed's roots");
    add_seed_flags(*verify, verify_seed);
    verify->add_option("--tol", tol, "Gram tolerance (default 1e-9 * (N+1))");

    std::string weights_out;
    auto* weights = app.add_subcommand("weights", "print the orthogonality measure as CSV");
    add_seed_flags(*weights, weights_seed);
    weights->add_option("--out", weights_out, "write the CSV to a file instead of stdout");

    std::uint64_t qmax = 29;
    std::string pair_text, conj_json;
    unsigned threads = 0;
    auto* conj = app.add_subcommand("conjecture", "check the head/tail formulas for C_pq chains");
    conj->add_option("--qmax", qmax, "largest q to scan");
    conj->add_option("--pair", pair_text, "check a single pair p,q");
    conj->add_option("--json", conj_json, "write the reports as JSON");
    conj->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* tables = app.add_subcommand("tables", "rebuild the reference Verblunsky tables and diff them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "popuc: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*cyclo) {
            if (cyclo_m == 0)
                throw UsageError("M must be positive");
            out << io::format_poly(cyclotomic(cyclo_m)) << "\n";
            return kOk;
        }
        if (*anti) {
            if (anti_m == 0)
                throw UsageError("M must be positive");
            out << io::format_poly(anticyclotomic(anti_m)) << "\n";
            return kOk;
        }
        if (*chain) {
            const Seed seed = resolve_seed(chain_seed);
            const SturmChain c = build_chain(seed.poly);
            out << io::join(c.verblunsky) << "\n";
            if (!chain_json.empty())
                write_file(chain_json, io::chain_to_json(c).dump(2) + "\n");
            if (!chain_csv.empty())
                write_file(chain_csv, io::verblunsky_csv(c));
            return kOk;
        }
        if (*verify) {
            const Seed seed = resolve_seed(verify_seed);
            const SturmChain c = build_chain(seed.poly);
            const Spectrum s = sturm_weights(c, roots_of(seed.spec));
            const GramReport r = gram_verify(c, s, tol.value_or(1e-9 * static_cast<double>(c.degree())));
            out << io::format_report(r) << "\n";
            return r.pass ? kOk : kFailed;
        }
        if (*weights) {
            const Seed seed = resolve_seed(weights_seed);
            const SturmChain c = build_chain(seed.poly);
            const std::string csv = io::spectrum_csv(sturm_weights(c, roots_of(seed.spec)));
            if (weights_out.empty())
                out << csv;
            else
                write_file(weights_out, csv);
            return kOk;
        }
        if (*conj) {
            std::vector<PairReport> reports;
            if (!pair_text.empty()) {
                const auto pq = parse_index_list(pair_text);
                if (pq.size() != 2)
                    throw UsageError("--pair expects p,q");
                reports.push_back(check_pair(pq[0], pq[1]));
            } else {
                if (qmax < 5)
                    throw UsageError("--qmax must be at least 5");
                reports = scan(qmax, threads, [&](const PairReport& r, std::size_t done, std::size_t total) {
                    err << "[" << done << "/" << total << "] p=" << r.p << " q=" << r.q << (r.pass ? " pass" : " FAIL")
                        << "\n";
                });
            }
            std::size_t passed = 0;
            for (const auto& r : reports) {
                out << pair_line(r) << "\n";
                passed += r.pass ? 1 : 0;
            }
            out << passed << "/" << reports.size() << " pass\n";
            if (!conj_json.empty())
                write_file(conj_json, io::pair_reports_to_json(reports).dump(2) + "\n");
            return passed == reports.size() ? kOk : kFailed;
        }
        if (*tables)
            return run_tables(out);
    } catch (const UsageError& e) {
        err << "popuc: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "popuc: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::DuplicateFactor:
        case ErrorKind::EvenM:
        case ErrorKind::ZeroRoot:
        case ErrorKind::InadmissibleSeed:
        case ErrorKind::BadParam:
        case ErrorKind::IndexOutOfRange:
            return kUsage;
        default:
            return kFailed;
        }
    }
    return kUsage;
}

} // namespace popuc::cli

#endif // POPUC_TOOLS_CLI_HPP
