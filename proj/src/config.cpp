#include "config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace abmeql {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

using Setter = std::function<void(const std::string&)>;

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + value);
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + value);
    }
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad seed value for '" + key + "': " + value);
    }
}

void parse_file(const std::string& path, const std::map<std::string, Setter>& setters) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        it->second(value);
    }
}

void check_rate(const char* name, double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ConfigError(std::string("config: ") + name + " must be >= 0");
}

void check_common(int X, double t_end, int n_record) {
    if (X < 2) throw ConfigError("config: X must be >= 2");
    if (!(t_end >= 0.0) || !std::isfinite(t_end))
        throw ConfigError("config: t_end must be >= 0");
    if (n_record < 2) throw ConfigError("config: n_record must be >= 2");
}

} // namespace

void BdmConfig::validate() const {
    check_rate("Pp", Pp);
    check_rate("Pd", Pd);
    check_rate("Pm", Pm);
    check_common(X, t_end, n_record);
    if (!(init_fraction >= 0.0 && init_fraction <= 1.0))
        throw ConfigError("config: init_fraction must lie in [0,1]");
}

void SirConfig::validate() const {
    check_rate("PI", PI);
    check_rate("PR", PR);
    check_rate("Pm", Pm);
    check_common(X, t_end, n_record);
    if (!(init_S_fraction >= 0.0 && init_S_fraction <= 1.0))
        throw ConfigError("config: init_S_fraction must lie in [0,1]");
    if (!(init_I_fraction >= 0.0 && init_I_fraction <= 1.0))
        throw ConfigError("config: init_I_fraction must lie in [0,1]");
    if (init_S_fraction + init_I_fraction > 1.0)
        throw ConfigError("config: init_S_fraction + init_I_fraction must be <= 1");
}

BdmConfig load_bdm_config(const std::string& path) {
    BdmConfig cfg;
    parse_file(path, {
        {"Pp", [&](const std::string& v) { cfg.Pp = parse_double("Pp", v); }},
        {"Pd", [&](const std::string& v) { cfg.Pd = parse_double("Pd", v); }},
        {"Pm", [&](const std::string& v) { cfg.Pm = parse_double("Pm", v); }},
        {"X", [&](const std::string& v) { cfg.X = static_cast<int>(parse_int("X", v)); }},
        {"init_fraction", [&](const std::string& v) { cfg.init_fraction = parse_double("init_fraction", v); }},
        {"t_end", [&](const std::string& v) { cfg.t_end = parse_double("t_end", v); }},
        {"n_record", [&](const std::string& v) { cfg.n_record = static_cast<int>(parse_int("n_record", v)); }},
        {"seed", [&](const std::string& v) { cfg.seed = parse_seed("seed", v); }},
    });
    cfg.validate();
    return cfg;
}

SirConfig load_sir_config(const std::string& path) {
    SirConfig cfg;
    parse_file(path, {
        {"PI", [&](const std::string& v) { cfg.PI = parse_double("PI", v); }},
        {"PR", [&](const std::string& v) { cfg.PR = parse_double("PR", v); }},
        {"Pm", [&](const std::string& v) { cfg.Pm = parse_double("Pm", v); }},
        {"X", [&](const std::string& v) { cfg.X = static_cast<int>(parse_int("X", v)); }},
        {"init_S_fraction", [&](const std::string& v) { cfg.init_S_fraction = parse_double("init_S_fraction", v); }},
        {"init_I_fraction", [&](const std::string& v) { cfg.init_I_fraction = parse_double("init_I_fraction", v); }},
        {"t_end", [&](const std::string& v) { cfg.t_end = parse_double("t_end", v); }},
        {"n_record", [&](const std::string& v) { cfg.n_record = static_cast<int>(parse_int("n_record", v)); }},
        {"seed", [&](const std::string& v) { cfg.seed = parse_seed("seed", v); }},
    });
    cfg.validate();
    return cfg;
}

} // namespace abmeql
