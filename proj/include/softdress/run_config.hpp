#pragma once

#include <cctype>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "softdress/kinematics.hpp"

// Sectioned key-value run configuration. Unknown keys are rejected and all
// physical bounds from the module preconditions are re-validated at parse
// time, so a RunConfig that parses is safe to hand to any subcommand.

namespace softdress {

struct ConfigError : std::runtime_error {
    std::string kind;  // "syntax" | "unknown-key" | "bound"
    ConfigError(std::string k, const std::string& msg)
        : std::runtime_error("config " + k + " error: " + msg), kind(std::move(k))
    {
    }
};

struct RunConfig {
    // [particles]
    double mass = 1.0;
    Vec3 v1{0.0, 0.0, 0.6};
    Vec3 v2{0.0, 0.0, -0.6};
    int charge1 = 1;
    int charge2 = 1;
    // [dressing]
    Vec3 dv1 = v1;
    Vec3 dv2 = v2;
    bool dressing_given = false;
    // [regulators]
    std::vector<double> lambda_list{0.1, 0.01, 0.001};
    double delta = 1.0;
    // [quadrature]
    int n_polar = 64;
    int n_azimuthal = 64;
    // [coupling]
    double e2 = 1.0;
    // [phase]
    double zeta = 0.0;
    double kappa = 0.0;
    double t = 1.0;
    double t_ref = 1.0;
    // [state]
    std::string preset = "bell_singlet";
    std::vector<std::complex<double>> amplitudes;  // 4 entries when preset == "custom"
    // [fock]
    std::vector<std::complex<double>> alphas{{1.0, 0.0}};
    int n_max = 20;
    // [output]
    std::string out_path;  // empty = stdout
    std::string format = "csv";

    std::string raw_text;  // as parsed, for provenance hashing
};

namespace detail {

inline std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<double> parse_reals(const std::string& key, const std::string& value)
{
    std::istringstream iss(value);
    std::vector<double> out;
    double x;
    while (iss >> x) out.push_back(x);
    std::string rest;
    if (!(iss >> rest).eof() || out.empty())
        throw ConfigError("syntax", "key '" + key + "': expected a list of reals, got '" + value + "'");
    return out;
}

inline double parse_real(const std::string& key, const std::string& value)
{
    const auto v = parse_reals(key, value);
    if (v.size() != 1)
        throw ConfigError("syntax", "key '" + key + "': expected a single real");
    return v[0];
}

inline Vec3 parse_vec3(const std::string& key, const std::string& value)
{
    const auto v = parse_reals(key, value);
    if (v.size() != 3)
        throw ConfigError("syntax", "key '" + key + "': expected 3 components");
    return {v[0], v[1], v[2]};
}

inline int parse_int(const std::string& key, const std::string& value)
{
    const double x = parse_real(key, value);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError("syntax", "key '" + key + "': expected an integer");
    return i;
}

inline std::vector<std::complex<double>> parse_complex_list(const std::string& key,
                                                            const std::string& value)
{
    const auto v = parse_reals(key, value);
    if (v.empty() || v.size() % 2 != 0)
        throw ConfigError("syntax", "key '" + key + "': expected re/im pairs");
    std::vector<std::complex<double>> out;
    for (std::size_t i = 0; i < v.size(); i += 2) out.emplace_back(v[i], v[i + 1]);
    return out;
}

inline void bound(bool ok, const std::string& msg)
{
    if (!ok) throw ConfigError("bound", msg);
}

}  // namespace detail

inline void validate_config(const RunConfig& c)
{
    using detail::bound;
    bound(c.mass > 0.0, "m: mass must be positive");
    bound(norm3(c.v1) < 1.0, "v1: |v| must be < 1 (superluminal)");
    bound(norm3(c.v2) < 1.0, "v2: |v| must be < 1 (superluminal)");
    bound(c.charge1 == 1 || c.charge1 == -1, "charges: entries must be +1 or -1");
    bound(c.charge2 == 1 || c.charge2 == -1, "charges: entries must be +1 or -1");
    bound(norm3(c.dv1) < 1.0, "dv1: |v| must be < 1");
    bound(norm3(c.dv2) < 1.0, "dv2: |v| must be < 1");
    bound(c.delta > 0.0, "delta: must be positive");
    bound(!c.lambda_list.empty(), "lambda_list: must be non-empty");
    for (double lam : c.lambda_list)
        bound(0.0 < lam && lam < c.delta, "lambda_list: require 0 < lambda < delta");
    bound(c.n_polar >= 4, "n_polar: need at least 4 nodes");
    bound(c.n_azimuthal >= 4, "n_azimuthal: need at least 4 nodes");
    bound(c.e2 > 0.0, "e2: coupling must be positive");
    bound(c.t != 0.0, "t: must be nonzero");
    bound(c.t_ref > 0.0, "t_ref: must be positive");
    bound(c.preset == "bell_singlet" || c.preset == "bell_triplet" || c.preset == "product" ||
              c.preset == "custom",
          "preset: must be bell_singlet|bell_triplet|product|custom");
    if (c.preset == "custom")
        bound(c.amplitudes.size() == 4, "amplitudes: custom preset needs 4 complex entries");
    bound(!c.alphas.empty() && c.alphas.size() <= 4, "alphas: 1-4 modes");
    bound(c.n_max >= 1 && c.n_max <= 64, "n_max: must be in [1, 64]");
    bound(c.format == "csv" || c.format == "json", "format: must be csv or json");
}

inline RunConfig parse_config(const std::string& text)
{
    using namespace detail;
    RunConfig cfg;
    cfg.raw_text = text;

    static const std::map<std::string, std::set<std::string>> known = {
        {"particles", {"m", "v1", "v2", "charges"}},
        {"dressing", {"dv1", "dv2"}},
        {"regulators", {"lambda_list", "delta"}},
        {"quadrature", {"n_polar", "n_azimuthal"}},
        {"coupling", {"e2"}},
        {"phase", {"zeta", "kappa", "t", "t_ref"}},
        {"state", {"preset", "amplitudes"}},
        {"fock", {"alphas", "n_max"}},
        {"output", {"path", "format"}},
    };

    std::istringstream iss(text);
    std::string line, section;
    bool dv1_set = false, dv2_set = false;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("syntax", "line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (!known.count(section))
                throw ConfigError("unknown-key", "line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("syntax", "line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError("syntax", "line " + std::to_string(lineno) + ": key outside any section");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (!known.at(section).count(key))
            throw ConfigError("unknown-key",
                              "line " + std::to_string(lineno) + ": unknown key '" + key + "' in [" + section + "]");

        if (section == "particles") {
            if (key == "m") cfg.mass = parse_real(key, value);
            else if (key == "v1") cfg.v1 = parse_vec3(key, value);
            else if (key == "v2") cfg.v2 = parse_vec3(key, value);
            else {
                const auto ch = parse_reals(key, value);
                if (ch.size() != 2)
                    throw ConfigError("syntax", "charges: expected 2 entries");
                cfg.charge1 = static_cast<int>(ch[0]);
                cfg.charge2 = static_cast<int>(ch[1]);
            }
        } else if (section == "dressing") {
            if (key == "dv1") { cfg.dv1 = parse_vec3(key, value); dv1_set = true; }
            else { cfg.dv2 = parse_vec3(key, value); dv2_set = true; }
        } else if (section == "regulators") {
            if (key == "lambda_list") cfg.lambda_list = parse_reals(key, value);
            else cfg.delta = parse_real(key, value);
        } else if (section == "quadrature") {
            if (key == "n_polar") cfg.n_polar = parse_int(key, value);
            else cfg.n_azimuthal = parse_int(key, value);
        } else if (section == "coupling") {
            cfg.e2 = parse_real(key, value);
        } else if (section == "phase") {
            if (key == "zeta") cfg.zeta = parse_real(key, value);
            else if (key == "kappa") cfg.kappa = parse_real(key, value);
            else if (key == "t") cfg.t = parse_real(key, value);
            else cfg.t_ref = parse_real(key, value);
        } else if (section == "state") {
            if (key == "preset") cfg.preset = value;
            else cfg.amplitudes = parse_complex_list(key, value);
        } else if (section == "fock") {
            if (key == "alphas") cfg.alphas = parse_complex_list(key, value);
            else cfg.n_max = parse_int(key, value);
        } else {  // output
            if (key == "path") cfg.out_path = value;
            else cfg.format = value;
        }
    }
    if (!dv1_set) cfg.dv1 = cfg.v1;
    if (!dv2_set) cfg.dv2 = cfg.v2;
    cfg.dressing_given = dv1_set || dv2_set;

    validate_config(cfg);
    return cfg;
}

// FNV-1a, for provenance headers
inline std::string config_hash(const std::string& text)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace softdress
