#include "compser/branch_table.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "compser/errors.hpp"
#include "compser/harmonics.hpp"
#include "compser/parallel.hpp"

namespace compser::harmonics {

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

// "key=value" extraction from the header comment line.
std::string header_field(const std::string& line, const std::string& key) {
    const std::string pat = key + "=";
    auto pos = line.find(pat);
    if (pos == std::string::npos) {
        throw IoError("branch-table header: missing field '" + key + "'");
    }
    pos += pat.size();
    auto end = line.find_first_of(" \t\r\n", pos);
    return line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

} // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::internal_exact: return "internal-exact";
        case Provenance::internal_float: return "internal-float";
        case Provenance::external_file: return "external-file";
    }
    return "internal-float";
}

Provenance provenance_from_name(const std::string& s) {
    if (s == "internal-exact") return Provenance::internal_exact;
    if (s == "internal-float") return Provenance::internal_float;
    if (s == "external-file") return Provenance::external_file;
    throw IoError("unknown provenance '" + s + "'");
}

BranchTable::BranchTable(int n, int i, int mmax, int lmax, Provenance prov)
    : n_(n), i_(i), mmax_(mmax), lmax_(lmax), prov_(prov) {
    if (n < 3) throw DomainError("BranchTable: n must be >= 3");
    if (i < 0) throw DomainError("BranchTable: i must be >= 0");
    if (mmax < 0 || lmax < 0) throw DomainError("BranchTable: mmax, lmax must be >= 0");
    entries_.assign(static_cast<std::size_t>(mmax + 1) * (lmax + 1), 0.0);
}

double BranchTable::at(int m, int l) const {
    if (m < 0 || m > mmax_ || l < 0 || l > lmax_) {
        throw DomainError("BranchTable::at: slot (" + std::to_string(m) + ", " +
                          std::to_string(l) + ") outside table range");
    }
    return entries_[static_cast<std::size_t>(m) * (lmax_ + 1) + l];
}

void BranchTable::set(int m, int l, double v) {
    if (m < 0 || m > mmax_ || l < 0 || l > lmax_) {
        throw DomainError("BranchTable::set: slot outside table range");
    }
    if (!(v >= 0.0)) {
        throw DomainError("BranchTable::set: entries are squared-norm ratios, must be >= 0");
    }
    entries_[static_cast<std::size_t>(m) * (lmax_ + 1) + l] = v;
}

BranchTable BranchTable::scaled(double c) const {
    BranchTable t = *this;
    for (auto& v : t.entries_) v *= c;
    return t;
}

void write_branch_table_csv(std::ostream& os, const BranchTable& t,
                            const std::string& config_echo) {
    os << "# branch-table n=" << t.n() << " i=" << t.i() << " mmax=" << t.mmax()
       << " lmax=" << t.lmax() << " provenance=" << provenance_name(t.provenance()) << "\n";
    if (!config_echo.empty()) os << "# config " << config_echo << "\n";
    for (int m = 0; m <= t.mmax(); ++m) {
        for (int l = 0; l <= t.lmax(); ++l) {
            os << m << ',' << l << ',' << format_value(t.at(m, l)) << "\n";
        }
    }
}

BranchTable read_branch_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# branch-table", 0) != 0) {
        throw IoError("branch-table CSV: missing '# branch-table' header line");
    }
    const int n = std::stoi(header_field(line, "n"));
    const int i = std::stoi(header_field(line, "i"));
    const int mmax = std::stoi(header_field(line, "mmax"));
    const int lmax = std::stoi(header_field(line, "lmax"));
    const Provenance prov = provenance_from_name(header_field(line, "provenance"));

    BranchTable t(n, i, mmax, lmax, prov);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        int m = 0, l = 0;
        char* end = nullptr;
        m = static_cast<int>(std::strtol(line.c_str(), &end, 10));
        if (*end != ',') throw IoError("branch-table CSV: malformed row '" + line + "'");
        l = static_cast<int>(std::strtol(end + 1, &end, 10));
        if (*end != ',') throw IoError("branch-table CSV: malformed row '" + line + "'");
        const double v = std::strtod(end + 1, &end);
        t.set(m, l, v);
    }
    return t;
}

std::string branch_table_to_json(const BranchTable& t, const std::string& config_echo) {
    nlohmann::ordered_json j;
    j["schema"] = "branch-table";
    j["n"] = t.n();
    j["i"] = t.i();
    j["mmax"] = t.mmax();
    j["lmax"] = t.lmax();
    j["provenance"] = provenance_name(t.provenance());
    if (!config_echo.empty()) j["config"] = nlohmann::ordered_json::parse(config_echo);
    auto rows = nlohmann::ordered_json::array();
    for (int m = 0; m <= t.mmax(); ++m) {
        for (int l = 0; l <= t.lmax(); ++l) {
            rows.push_back({m, l, t.at(m, l)});
        }
    }
    j["entries"] = std::move(rows);
    return j.dump(2);
}

BranchTable branch_table_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("branch-table JSON: ") + e.what());
    }
    BranchTable t(j.at("n").get<int>(), j.at("i").get<int>(), j.at("mmax").get<int>(),
                  j.at("lmax").get<int>(),
                  provenance_from_name(j.at("provenance").get<std::string>()));
    for (const auto& row : j.at("entries")) {
        t.set(row.at(0).get<int>(), row.at(1).get<int>(), row.at(2).get<double>());
    }
    return t;
}

BranchTable build_branch_table(int n, int mmax, int lmax, TableMode mode,
                               const BuildOptions& opts) {
    if (lmax > mmax) throw DomainError("build_branch_table: lmax must be <= mmax");
    const std::int64_t cells = static_cast<std::int64_t>(mmax + 1) * (lmax + 1);
    if (cells > opts.cell_cap) {
        throw ResourceError("build_branch_table: " + std::to_string(cells) +
                            " cells exceed the cap of " + std::to_string(opts.cell_cap));
    }
    if (mode == TableMode::exact && mmax > opts.exact_mode_mmax_cap) {
        throw ResourceError("build_branch_table: exact mode capped at mmax=" +
                            std::to_string(opts.exact_mode_mmax_cap) +
                            " (requested " + std::to_string(mmax) + ")");
    }

    BranchTable t(n, 0, mmax, lmax,
                  mode == TableMode::exact ? Provenance::internal_exact
                                           : Provenance::internal_float);
    parallel_for(0, cells, opts.threads, [&](std::int64_t idx) {
        const int m = static_cast<int>(idx / (lmax + 1));
        const int l = static_cast<int>(idx % (lmax + 1));
        if (l > m) return;  // empty slot stays 0
        if (mode == TableMode::exact) {
            t.set(m, l, branch_coeff_exact(n, m, l).get_d());
        } else {
            t.set(m, l, branch_coeff_fast(n, m, l));
        }
    });
    return t;
}

} // namespace compser::harmonics
