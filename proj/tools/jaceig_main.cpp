// Command-line front end: solve branches of a tridiagonal eigenproblem as
// exact truncated series, expand individual monomials, run the verification
// suites, and benchmark the coefficient enumeration.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 invalid matrix, 4 degree/size limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jaceig/core_model.hpp"
#include "jaceig/hypergeometric.hpp"
#include "jaceig/io.hpp"
#include "jaceig/oracle.hpp"
#include "jaceig/verify.hpp"

using namespace jaceig;
using nlohmann::json;

namespace {

constexpr long kMaxDegree = 64;
constexpr int kMaxOrder = 16;

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw Error("cannot open output file '" + path + "'");
        out << text;
    }
};

void check_limits(int d, long N) {
    if (N < 0 || N > kMaxDegree)
        throw LimitExceeded("degree " + std::to_string(N) + " outside 0.." +
                            std::to_string(kMaxDegree));
    if (d > kMaxOrder)
        throw LimitExceeded("matrix order " + std::to_string(d) + " above the exact-series limit " +
                            std::to_string(kMaxOrder));
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<int> parse_branches(const std::string& spec, int d) {
    if (spec == "all") {
        std::vector<int> ks(d);
        for (int k = 1; k <= d; ++k) ks[k - 1] = k;
        return ks;
    }
    int k;
    try {
        k = std::stoi(spec);
    } catch (...) {
        throw ParseError("k: expected a branch index or 'all', got '" + spec + "'");
    }
    if (k < 1 || k > d) throw BadIndex("branch index " + std::to_string(k) + " outside 1.." +
                                       std::to_string(d));
    return {k};
}

MonomialSpec parse_monomial(const std::string& text, const VarLayout& L) {
    MonomialSpec spec;
    std::string right = text, left;
    if (auto semi = text.find(';'); semi != std::string::npos) {
        right = text.substr(0, semi);
        left = text.substr(semi + 1);
    }
    auto parse_list = [](const std::string& s) {
        std::vector<long> out;
        std::string item;
        std::istringstream is(s);
        while (std::getline(is, item, ','))
            if (!item.empty()) out.push_back(std::stol(item));
        return out;
    };
    try {
        spec.k = parse_list(right);
        spec.kt = parse_list(left);
    } catch (...) {
        throw ParseError("monomial: bad exponent list '" + text + "'");
    }
    if (static_cast<int>(spec.k.size()) != L.r() ||
        static_cast<int>(spec.kt.size()) != L.rt())
        throw ParseError("monomial: expected " + std::to_string(L.r()) + "(;" +
                         std::to_string(L.rt()) + ") exponents for this branch, got '" + text +
                         "'");
    return spec;
}

json series_to_json(const TruncatedSeries& s, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json t;
        t["exps"] = e;
        t["coeff"] = rat_str(c);
        terms.push_back(t);
    }
    json out;
    out["nvars"] = s.nvars();
    out["cap"] = s.cap();
    out["terms"] = terms;
    out["text"] = s.to_text();
    out["vars"] = names;
    return out;
}

int cmd_solve(const std::string& input, const std::string& kspec, long N,
              const std::string& mode, const std::string& format, const Output& out) {
    const bool exact = mode == "exact";
    JacobiMatrix M = parse_matrix_file(input, !exact);
    check_limits(M.d, N);
    const std::vector<int> branches = parse_branches(kspec, M.d);

    std::vector<EigenResult> results(branches.size());
    if (branches.size() > 1) {
        auto all = solve_all(M, N, true);
        for (std::size_t i = 0; i < branches.size(); ++i) results[i] = all[branches[i] - 1];
    } else {
        results[0] = solve_branch(M, branches[0], N);
    }

    std::ostringstream os;
    if (format == "json") {
        json root = json::array();
        for (std::size_t i = 0; i < branches.size(); ++i) {
            const EigenResult& r = results[i];
            const BranchConfig cfg = relabel(M, branches[i]);
            json item;
            item["k"] = branches[i];
            item["eigenvalue"] = exact ? json(rat_str(r.eigenvalue))
                                       : json(r.eigenvalue.get_d());
            item["lambda_series"] = series_to_json(r.lambda_series, cfg.layout().names());
            json vec = json::array();
            for (const Rat& c : r.full_vector(cfg))
                vec.push_back(exact ? json(rat_str(c)) : json(c.get_d()));
            item["eigenvector"] = vec;
            item["residual"] = r.residual;
            root.push_back(item);
        }
        os << root.dump(2) << "\n";
    } else if (format == "csv") {
        os << "k,eigenvalue,residual\n";
        for (std::size_t i = 0; i < branches.size(); ++i)
            os << branches[i] << ","
               << (exact ? rat_str(results[i].eigenvalue)
                         : format_double(results[i].eigenvalue.get_d()))
               << "," << format_double(results[i].residual) << "\n";
    } else {
        for (std::size_t i = 0; i < branches.size(); ++i) {
            const EigenResult& r = results[i];
            const BranchConfig cfg = relabel(M, branches[i]);
            os << "branch k=" << branches[i] << "\n";
            if (exact)
                os << "  eigenvalue " << rat_str(r.eigenvalue) << " (" << r.eigenvalue.get_d()
                   << ")\n";
            else
                os << "  eigenvalue " << format_double(r.eigenvalue.get_d()) << "\n";
            os << "  lambda-series " << r.lambda_series.to_text() << "\n";
            os << "  eigenvector";
            for (const Rat& c : r.full_vector(cfg))
                os << " " << (exact ? rat_str(c) : format_double(c.get_d()));
            os << "\n  residual " << format_double(r.residual) << "\n";
        }
    }
    out.write(os.str());
    return 0;
}

int cmd_expand(const std::string& input, const std::string& kspec, long N,
               const std::string& monomial, const std::string& format, const Output& out) {
    JacobiMatrix M = parse_matrix_file(input, false);
    check_limits(M.d, N);
    int k = parse_branches(kspec, M.d).at(0);
    const BranchConfig cfg = relabel(M, k);
    const VarLayout L = cfg.layout();
    const MonomialSpec spec = parse_monomial(monomial, L);

    TruncatedSeries s = expand_u_monomial(spec, L, N);
    std::ostringstream os;
    if (format == "json") {
        os << series_to_json(s, L.names()).dump(2) << "\n";
    } else if (format == "csv") {
        os << "exponents,coeff\n";
        for (const auto& [e, c] : s.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
            os << "," << rat_str(c) << "\n";
        }
    } else {
        os << s.to_text() << "\n";
    }
    out.write(os.str());
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, const VerifyConfig& cfg,
               const std::string& format, const Output& out) {
    for (const std::string& s : suites) {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw ParseError("unknown suite '" + s + "'");
    }
    auto results = run_suites(suites, cfg);

    std::ostringstream os;
    bool all_pass = true;
    if (format == "json") {
        json root = json::array();
        for (const auto& r : results) {
            json item;
            item["suite"] = r.name;
            item["passed"] = r.passed;
            item["cases"] = r.cases;
            if (!r.passed) item["first_failure"] = r.first_failure;
            root.push_back(item);
            all_pass = all_pass && r.passed;
        }
        os << root.dump(2) << "\n";
    } else if (format == "csv") {
        // plotting feed: the residual-order sweep rows
        os << "degree,epsilon,residual,dense_gap\n";
        auto rows = residual_order_sweep(4, 2,
                                         {make_rat(1, 100), make_rat(1, 1000), make_rat(1, 10000)},
                                         {1, 2, 3}, cfg.seed);
        for (const auto& row : rows)
            os << row.N << "," << format_double(row.epsilon.get_d()) << ","
               << format_double(row.residual) << "," << format_double(row.dense_gap) << "\n";
        for (const auto& r : results) all_pass = all_pass && r.passed;
    } else {
        for (const auto& r : results) {
            os << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " ("
               << r.cases << " cases)";
            if (!r.passed) os << " first failure: " << r.first_failure;
            os << "\n";
            all_pass = all_pass && r.passed;
        }
    }
    out.write(os.str());
    return all_pass ? 0 : 1;
}

int cmd_bench(int max_d, long N, const std::string& format, const Output& out) {
    using clock = std::chrono::steady_clock;
    check_limits(max_d, N);
    std::ostringstream os;
    if (format == "csv") os << "d,k,degree,terms,expand_ms\n";
    for (int d = 2; d <= max_d; ++d) {
        int k = (d + 1) / 2;
        VarLayout L(d - k, k - 1);
        auto t0 = clock::now();
        TruncatedSeries s = expand_u_monomial(MonomialSpec::unit_u(1, L), L, N);
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        if (format == "csv")
            os << d << "," << k << "," << N << "," << s.terms().size() << "," << ms << "\n";
        else
            os << "d=" << d << " k=" << k << " degree=" << N << ": " << s.terms().size()
               << " terms in " << ms << " ms\n";
    }
    out.write(os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact perturbative series eigensolver for tridiagonal matrices"};
    app.require_subcommand(1);

    std::string input, kspec = "all", mode = "exact", format = "text", monomial;
    long degree = 3;
    Output out;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", input, "matrix file")->required();
        cmd->add_option("--k", kspec, "branch index or 'all'");
        cmd->add_option("--degree", degree, "series truncation degree");
        cmd->add_option("--out", out.path, "output file (default stdout)");
    };

    CLI::App* solve = app.add_subcommand("solve", "eigenpairs of every requested branch");
    add_common(solve, true);
    solve->add_option("--mode", mode, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    solve->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* expand = app.add_subcommand("expand", "series of one u-monomial");
    add_common(expand, true);
    expand->add_option("--monomial", monomial, "exponents k1,..,kr[;kt1,..,ktrt]")->required();
    expand->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    VerifyConfig vcfg;
    std::vector<std::string> suites;
    verify->add_option("--suite", suites, "suite filter (repeatable)");
    verify->add_option("--seed", vcfg.seed, "seed for the randomized suites");
    verify->add_option("--max-d", vcfg.max_d, "largest matrix order");
    verify->add_option("--degree", vcfg.degree, "series degree for the exact suites");
    verify->add_option("--points", vcfg.points, "random points per case");
    verify->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out.path, "output file (default stdout)");
    verify->add_option("--inject-fault", vcfg.inject_fault, "fault-injection hook for tests")
        ->group("");  // hidden

    CLI::App* bench = app.add_subcommand("bench", "time the coefficient enumeration");
    int bench_max_d = 6;
    bench->add_option("--max-d", bench_max_d, "largest matrix order");
    bench->add_option("--degree", degree, "series truncation degree");
    bench->add_option("--format", format, "text|csv")->check(CLI::IsMember({"text", "csv"}));
    bench->add_option("--out", out.path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(input, kspec, degree, mode, format, out);
        if (expand->parsed()) return cmd_expand(input, kspec, degree, monomial, format, out);
        if (verify->parsed()) return cmd_verify(suites, vcfg, format, out);
        if (bench->parsed()) return cmd_bench(bench_max_d, degree, format, out);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 4;
    } catch (const DuplicateDiagonal& e) {
        std::cerr << "invalid matrix: " << e.what() << "\n";
        return 3;
    } catch (const BadIndex& e) {
        std::cerr << "invalid matrix: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
