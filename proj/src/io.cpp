// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nclab::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

namespace {

double parse_double_strict(const std::string& text, std::size_t& pos) {
    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1.0;
        ++pos;
    }
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first)
        throw std::invalid_argument("expected a number in '" + text + "'");
    pos += static_cast<std::size_t>(ptr - first);
    const double v = sign * value;
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite number in '" + text + "'");
    return v;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = line.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, p - start));
        start = p + 1;
    }
    return out;
}

std::uint64_t parse_u64(const std::string& text) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw std::invalid_argument("expected an unsigned integer, got '" + text + "'");
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::string t = trim(text);
    std::size_t pos = 0;
    const double re = parse_double_strict(t, pos);
    if (pos >= t.size() || (t[pos] != '+' && t[pos] != '-'))
        throw std::invalid_argument("expected '+' or '-' in complex literal '" + text + "'");
    const double im = parse_double_strict(t, pos);
    if (pos >= t.size() || t[pos] != 'i')
        throw std::invalid_argument("expected trailing 'i' in complex literal '" + text + "'");
    if (pos + 1 != t.size())
        throw std::invalid_argument("trailing characters in complex literal '" + text + "'");
    return {re, im};
}

void write_experiment_csv(std::ostream& os, const conclab::ExperimentResult& res) {
    os << "replica,n,seed,re_z,im_z\n";
    for (std::size_t i = 0; i < res.samples.size(); ++i) {
        os << i << ',' << res.config.n << ','
           << conclab::replica_seed(res.config.master_seed, i) << ','
           << format_double(res.samples[i].real()) << ','
           << format_double(res.samples[i].imag()) << '\n';
    }
}

std::vector<Complex> SampleTable::samples() const {
    std::vector<Complex> out;
    out.reserve(rows.size());
    for (const SampleRow& r : rows) out.push_back(r.z);
    return out;
}

SampleTable read_experiment_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("experiment CSV: empty stream");
    if (trim(line) != "replica,n,seed,re_z,im_z")
        throw std::invalid_argument("experiment CSV: unexpected header '" + line + "'");

    SampleTable table;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 5)
            throw std::invalid_argument("experiment CSV: expected 5 fields, got '" + line + "'");
        SampleRow row;
        row.replica = parse_u64(fields[0]);
        row.n = parse_u64(fields[1]);
        row.seed = parse_u64(fields[2]);
        std::size_t pos = 0;
        const std::string re_s = trim(fields[3]), im_s = trim(fields[4]);
        const double re = parse_double_strict(re_s, pos);
        if (pos != re_s.size()) throw std::invalid_argument("experiment CSV: bad re_z field");
        pos = 0;
        const double im = parse_double_strict(im_s, pos);
        if (pos != im_s.size()) throw std::invalid_argument("experiment CSV: bad im_z field");
        row.z = {re, im};
        table.rows.push_back(row);
    }
    if (table.rows.empty()) throw std::invalid_argument("experiment CSV: no data rows");
    table.n = table.rows.front().n;
    for (const SampleRow& r : table.rows)
        if (r.n != table.n) throw std::invalid_argument("experiment CSV: inconsistent n column");
    return table;
}

void write_tail_csv(std::ostream& os, const conclab::TailEstimate& tail) {
    os << "t,survival,count\n";
    for (std::size_t k = 0; k < tail.grid.size(); ++k) {
        const long long count =
            std::llround(tail.survival[k] * static_cast<double>(tail.replicas));
        os << format_double(tail.grid[k]) << ',' << format_double(tail.survival[k]) << ','
           << count << '\n';
    }
}

std::string format_fit(const conclab::FittedBound& fit) {
    std::string out = "C_hat=" + format_double(fit.big_c);
    out += " c_hat=" + format_double(fit.rate);
    out += " residual=" + format_double(fit.residual);
    out += " n=" + std::to_string(fit.n);
    out += " d=" + std::to_string(fit.degree);
    return out;
}

conclab::ExperimentConfig read_config(std::istream& is) {
    conclab::ExperimentConfig cfg;
    cfg.ensemble.clear();
    ensembles::EnsembleSpec spec;
    bool have_poly = false, have_m = false, have_n = false, have_ensemble = false,
         have_replicas = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty value");

        if (key == "poly") {
            cfg.poly_text = value;
            have_poly = true;
        } else if (key == "m") {
            cfg.m = static_cast<int>(parse_u64(value));
            have_m = true;
        } else if (key == "n") {
            cfg.n = parse_u64(value);
            have_n = true;
        } else if (key == "ensemble") {
            spec.kind = ensembles::kind_from_string(value);
            have_ensemble = true;
        } else if (key == "replicas") {
            cfg.replicas = parse_u64(value);
            have_replicas = true;
        } else if (key == "seed") {
            cfg.master_seed = Seed{parse_u64(value)};
        } else if (key == "scale_by_sqrt_n") {
            if (value == "true" || value == "1")
                cfg.scale_by_sqrt_n = true;
            else if (value == "false" || value == "0")
                cfg.scale_by_sqrt_n = false;
            else
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": scale_by_sqrt_n must be true/false");
        } else if (key == "diag_variance") {
            std::size_t pos = 0;
            spec.diag_variance = parse_double_strict(value, pos);
        } else if (key == "offdiag_variance") {
            std::size_t pos = 0;
            spec.offdiag_variance = parse_double_strict(value, pos);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (!have_poly || !have_m || !have_n || !have_ensemble || !have_replicas)
        throw std::invalid_argument("config: poly, m, n, ensemble and replicas are required");
    cfg.ensemble.push_back(spec);
    cfg.validate();
    return cfg;
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ',';
            os << format_complex(m(i, j));
        }
        os << '\n';
    }
}

Matrix read_matrix_csv(std::istream& is) {
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        std::vector<Complex> row;
        for (const std::string& cell : split(line, ',')) row.push_back(parse_complex(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("matrix CSV: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix CSV: empty input");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace nclab::io
