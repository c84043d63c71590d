#pragma once

// CSV ingest and atomic file output. Records are one value column, optionally
// preceded by a time column; the time column must be uniformly spaced to
// within 0.1 percent or the file is rejected, because the spectrum bins would
// silently stop meaning one frequency each.

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hff/common.hpp"

namespace hff {

struct series {
    std::vector<double> y;
    double dt = 0.0;      // sample spacing in the time column's unit
    bool has_dt = false;  // false when the file had no time column
};

namespace detail {

inline bool parse_double(const std::string& tok, double& out) {
    const char* s = tok.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtod(s, &end);
    if (end == s || errno == ERANGE) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : line) {
        if (ch == ',' || ch == ';' || ch == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        const auto b = f.find_first_not_of(" \t\r");
        const auto e = f.find_last_not_of(" \t\r");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

}  // namespace detail

inline series read_csv(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "read_csv: cannot open " + path);
    series out;
    std::vector<double> tcol;
    std::string line;
    std::size_t cols = 0;
    bool first_data = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = detail::split_fields(line);
        if (fields.empty()) continue;
        std::vector<double> vals(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (!detail::parse_double(fields[i], vals[i])) { numeric = false; break; }
        if (!numeric) {
            // one non-numeric header line is tolerated, anything later is not
            require(first_data, "read_csv: bad number at line " + std::to_string(lineno));
            continue;
        }
        if (first_data) {
            cols = fields.size();
            require(cols == 1 || cols == 2, "read_csv: expected 1 or 2 columns");
            first_data = false;
        }
        require(fields.size() == cols,
                "read_csv: ragged row at line " + std::to_string(lineno));
        if (cols == 2) {
            tcol.push_back(vals[0]);
            out.y.push_back(vals[1]);
        } else {
            out.y.push_back(vals[0]);
        }
    }
    require(!out.y.empty(), "read_csv: no samples in " + path);
    if (cols == 2 && tcol.size() >= 2) {
        std::vector<double> gaps(tcol.size() - 1);
        for (std::size_t i = 0; i + 1 < tcol.size(); ++i) gaps[i] = tcol[i + 1] - tcol[i];
        std::vector<double> sorted = gaps;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        const double med = sorted.size() % 2 == 1
                               ? sorted[mid]
                               : 0.5 * (sorted[mid - 1] + sorted[mid]);
        require(med > 0.0, "read_csv: time column must increase");
        for (const double g : gaps)
            require(std::abs(g - med) <= 1e-3 * med,
                    "read_csv: time column spacing varies by more than 0.1%");
        out.dt = med;
        out.has_dt = true;
    }
    return out;
}

// Writes through a temp file and renames into place, so a crash mid-write
// never leaves a truncated file under the real name.
inline void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream outf(tmp, std::ios::binary | std::ios::trunc);
        require(outf.good(), "write: cannot open " + tmp);
        outf.write(content.data(), static_cast<std::streamsize>(content.size()));
        outf.flush();
        if (!outf.good()) {
            outf.close();
            std::remove(tmp.c_str());
            throw error("write: failed writing " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw error("write: cannot rename into " + path);
    }
}

// %.17g keeps doubles exactly round-trippable through the file.
inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_csv(const std::string& path, const std::vector<double>& y,
                      double dt = 0.0, bool with_time = false) {
    std::ostringstream body;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (with_time)
            body << format_value(static_cast<double>(i) * dt) << ',';
        body << format_value(y[i]) << '\n';
    }
    write_text_atomic(path, body.str());
}

}  // namespace hff
