#include "carpets/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace carpets {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        fail(key + ": expected an integer, got '" + v + "'");
    }
}

double parse_real(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        fail(key + ": expected a number, got '" + v + "'");
    }
}

Digit parse_digit(const std::string& key, const std::string& tok) {
    auto parts = split(tok, ',');
    if (parts.size() != 2) fail(key + ": digit '" + tok + "' must be 'i,j'");
    return Digit{static_cast<int>(parse_int(key, parts[0])),
                 static_cast<int>(parse_int(key, parts[1]))};
}

}  // namespace

TwoRowCtx RunConfig::ctx() const {
    if (!two_row) throw std::invalid_argument("config: command needs a two-row measure");
    return make_two_row_ctx(*two_row, *carpet);
}

RunConfig parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            fail("line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, val).second) fail("duplicate key '" + key + "'");
    }

    auto need = [&](const std::string& k) -> const std::string& {
        auto it = kv.find(k);
        if (it == kv.end()) fail("missing key '" + k + "'");
        return it->second;
    };
    auto has = [&](const std::string& k) { return kv.count(k) > 0; };

    int m = static_cast<int>(parse_int("m", need("m")));
    int n = static_cast<int>(parse_int("n", need("n")));

    bool shorthand = has("n0") || has("n1") || has("q0");
    bool explicit_set = has("digits") || has("p");
    if (shorthand && explicit_set)
        fail("give either the two-row shorthand (n0,n1,q0) or digits+p, not both");
    if (!shorthand && !explicit_set) fail("missing measure: give n0/n1/q0 or digits+p");

    RunConfig rc;
    if (shorthand) {
        int n0 = static_cast<int>(parse_int("n0", need("n0")));
        int n1 = static_cast<int>(parse_int("n1", need("n1")));
        const std::string& q0s = need("q0");
        auto carpet = std::make_shared<CarpetSpec>(two_row_carpet(m, n, n0, n1));
        double q0;
        if (q0s == "exceptional") q0 = exceptional_q0(n0, n1, carpet->sigma);
        else if (q0s == "collapse") q0 = collapse_q0(n0, n1, carpet->sigma);
        else q0 = parse_real("q0", q0s);
        TwoRowMeasure tr = make_two_row(n0, n1, q0);
        rc.carpet = carpet;
        rc.profile = attractor_profile(*carpet);
        rc.weights = two_row_weights(*carpet, tr);
        rc.two_row = tr;
        return rc;
    }

    std::vector<Digit> digits;
    for (const std::string& tok : split(need("digits"), ';'))
        if (!tok.empty()) digits.push_back(parse_digit("digits", tok));
    auto carpet = std::make_shared<CarpetSpec>(make_carpet(m, n, digits));

    std::vector<double> p(carpet->digits.size(), 0.0);
    std::vector<bool> seen(carpet->digits.size(), false);
    for (const std::string& tok : split(need("p"), ';')) {
        if (tok.empty()) continue;
        std::size_t colon = tok.find(':');
        if (colon == std::string::npos) fail("p: entry '" + tok + "' must be 'i,j:weight'");
        Digit d = parse_digit("p", trim(tok.substr(0, colon)));
        int idx = carpet->digit_index(d.i, d.j);
        if (idx < 0)
            fail("p: digit (" + std::to_string(d.i) + "," + std::to_string(d.j) +
                 ") not in the digit set");
        if (seen[static_cast<std::size_t>(idx)])
            fail("p: duplicate weight for digit (" + std::to_string(d.i) + "," +
                 std::to_string(d.j) + ")");
        seen[static_cast<std::size_t>(idx)] = true;
        p[static_cast<std::size_t>(idx)] = parse_real("p", trim(tok.substr(colon + 1)));
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (!seen[k])
            fail("p: missing weight for digit (" + std::to_string(carpet->digits[k].i) + "," +
                 std::to_string(carpet->digits[k].j) + ")");

    rc.carpet = carpet;
    rc.profile = attractor_profile(*carpet);
    rc.weights = make_weights(*carpet, p);
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace carpets
