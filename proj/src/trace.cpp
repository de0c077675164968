#include "trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace abmeql {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

} // namespace

double Trace::dt() const {
    if (times.size() < 2) throw ConfigError("trace: need at least 2 record times");
    const double step = times[1] - times[0];
    if (!(step > 0.0)) throw ConfigError("trace: times must be strictly increasing");
    for (std::size_t i = 1; i + 1 < times.size(); ++i) {
        const double d = times[i + 1] - times[i];
        if (std::abs(d - step) > 1e-8 * std::max(1.0, std::abs(step)))
            throw ConfigError("trace: non-uniform time grid");
    }
    return step;
}

int Trace::species_index(const std::string& name) const {
    for (std::size_t i = 0; i < species.size(); ++i)
        if (species[i] == name) return static_cast<int>(i);
    return -1;
}

std::string Trace::to_csv() const {
    std::ostringstream out;
    out << "t";
    for (const auto& s : species) out << ',' << s;
    if (has_correlation()) out << ",F";
    out << ",n_replicates\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        out << fmt17(times[i]);
        for (const auto& col : density) out << ',' << fmt17(col[i]);
        if (has_correlation()) out << ',' << fmt17(correlation[i]);
        out << ',' << n_replicates << '\n';
    }
    return out.str();
}

void Trace::write_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("trace: cannot write '" + path + "'");
    out << to_csv();
}

Trace Trace::parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("trace csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = split_csv_line(line);
    if (header.size() < 3 || header.front() != "t" || header.back() != "n_replicates")
        throw ConfigError("trace csv: header must be t,<species...>[,F],n_replicates");

    Trace tr;
    bool with_corr = false;
    for (std::size_t i = 1; i + 1 < header.size(); ++i) {
        if (header[i] == "F" && i + 2 == header.size()) {
            with_corr = true;
        } else {
            tr.species.push_back(header[i]);
        }
    }
    if (tr.species.empty()) throw ConfigError("trace csv: no species columns");
    tr.density.assign(tr.species.size(), {});

    const std::size_t ncols = header.size();
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != ncols)
            throw ConfigError("trace csv: row has " + std::to_string(fields.size()) +
                              " fields, expected " + std::to_string(ncols));
        std::size_t k = 0;
        tr.times.push_back(std::stod(fields[k++]));
        for (auto& col : tr.density) col.push_back(std::stod(fields[k++]));
        if (with_corr) tr.correlation.push_back(std::stod(fields[k++]));
        tr.n_replicates = static_cast<int>(std::stol(fields[k]));
    }
    if (tr.times.size() < 2) throw ConfigError("trace csv: need at least 2 rows");
    return tr;
}

Trace Trace::read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("trace: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

Trace trace_mean(const std::vector<Trace>& traces) {
    if (traces.empty()) throw ConfigError("trace_mean: empty ensemble");
    const Trace& first = traces.front();
    const std::size_t n = first.size();
    const std::size_t ns = first.species.size();
    for (const auto& tr : traces) {
        if (tr.size() != n || tr.species.size() != ns ||
            tr.has_correlation() != first.has_correlation())
            throw ConfigError("trace_mean: traces have mismatched shapes");
    }

    Trace out;
    out.times = first.times;
    out.species = first.species;
    out.density.assign(ns, std::vector<double>(n, 0.0));
    out.n_replicates = 0;

    // Fixed accumulation order (replicate 0,1,2,...) keeps the reduction
    // bit-identical no matter how replicates were scheduled.
    for (const auto& tr : traces) {
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t i = 0; i < n; ++i) out.density[s][i] += tr.density[s][i];
        out.n_replicates += tr.n_replicates;
    }
    const double inv = 1.0 / static_cast<double>(traces.size());
    for (auto& col : out.density)
        for (auto& v : col) v *= inv;

    if (first.has_correlation()) {
        out.correlation.assign(n, std::numeric_limits<double>::quiet_NaN());
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            int defined = 0;
            for (const auto& tr : traces) {
                const double f = tr.correlation[i];
                if (!std::isnan(f)) {
                    sum += f;
                    ++defined;
                }
            }
            if (defined > 0) out.correlation[i] = sum / defined;
        }
    }
    return out;
}

} // namespace abmeql
