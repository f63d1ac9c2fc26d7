#include "jaceig/io.hpp"

#include <fstream>
#include <sstream>

#include "jaceig/errors.hpp"

namespace jaceig {

namespace {

Rat parse_entry(const std::string& tok, const std::string& field, std::size_t index,
                bool allow_decimals) {
    try {
        return allow_decimals ? parse_decimal(tok) : parse_rat(tok);
    } catch (const ParseError&) {
        throw ParseError(field + "[" + std::to_string(index + 1) + "]: bad value '" + tok +
                         "'" + (allow_decimals ? "" : " (exact mode accepts num or num/den)"));
    }
}

} // namespace

JacobiMatrix parse_matrix_text(const std::string& text, bool allow_decimals) {
    std::istringstream in(text);
    std::string line;
    long d = -1;
    std::vector<Rat> alpha, beta, gamma;
    bool saw_alpha = false, saw_beta = false, saw_gamma = false;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;

        if (key == "d") {
            std::string tok;
            if (!(ls >> tok)) throw ParseError("d: missing value");
            try {
                d = std::stol(tok);
            } catch (...) {
                throw ParseError("d: bad value '" + tok + "'");
            }
        } else if (key == "alpha" || key == "beta" || key == "gamma") {
            std::vector<Rat> vals;
            std::string tok;
            for (std::size_t i = 0; ls >> tok; ++i)
                vals.push_back(parse_entry(tok, key, i, allow_decimals));
            if (key == "alpha") {
                alpha = std::move(vals);
                saw_alpha = true;
            } else if (key == "beta") {
                beta = std::move(vals);
                saw_beta = true;
            } else {
                gamma = std::move(vals);
                saw_gamma = true;
            }
        } else {
            throw ParseError("unknown field '" + key + "'");
        }
    }

    if (d < 0) throw ParseError("d: field missing");
    if (!saw_alpha) throw ParseError("alpha: field missing");
    if (!saw_beta) throw ParseError("beta: field missing");
    if (!saw_gamma) throw ParseError("gamma: field missing");
    if (static_cast<long>(alpha.size()) != d)
        throw ParseError("alpha: expected " + std::to_string(d) + " entries, found " +
                         std::to_string(alpha.size()));
    if (static_cast<long>(beta.size()) != d - 1)
        throw ParseError("beta: expected " + std::to_string(d - 1) + " entries, found " +
                         std::to_string(beta.size()));
    if (static_cast<long>(gamma.size()) != d - 1)
        throw ParseError("gamma: expected " + std::to_string(d - 1) + " entries, found " +
                         std::to_string(gamma.size()));

    JacobiMatrix M;
    M.d = static_cast<int>(d);
    M.alpha = std::move(alpha);
    M.beta = std::move(beta);
    M.gamma = std::move(gamma);
    M.validate();
    return M;
}

JacobiMatrix parse_matrix_file(const std::string& path, bool allow_decimals) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_text(ss.str(), allow_decimals);
}

std::string matrix_to_text(const JacobiMatrix& M) {
    std::ostringstream os;
    os << "d " << M.d << "\n";
    auto row = [&](const char* name, const std::vector<Rat>& v) {
        os << name;
        for (const Rat& q : v) os << " " << rat_str(q);
        os << "\n";
    };
    row("alpha", M.alpha);
    row("beta", M.beta);
    row("gamma", M.gamma);
    return os.str();
}

} // namespace jaceig
